#pragma once

// Recursive-descent parser for the polynomial / rational-function strings
// used in JSON inputs: + - * / ^ (integer exponents, possibly negative),
// parentheses, integer literals and identifiers.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "hdr/alg/bipoly.hpp"
#include "hdr/alg/ratfun.hpp"

namespace hdr::alg {

struct Expr {
    enum class Kind { number, variable, add, sub, mul, div, neg, pow };
    Kind kind;
    mpz_class number;
    std::string name;
    long exponent = 0;
    std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws InputError naming the offending position.
ExprPtr parse_expr(const std::string& text);

void collect_variables(const Expr& e, std::vector<std::string>& out);

// Ctx supplies: T number(const mpz_class&), T variable(const std::string&),
// T divide(const T&, const T&), T power(const T&, long).
template <class T, class Ctx>
T evaluate(const Expr& e, const Ctx& ctx) {
    switch (e.kind) {
        case Expr::Kind::number: return ctx.number(e.number);
        case Expr::Kind::variable: return ctx.variable(e.name);
        case Expr::Kind::add: return evaluate<T>(*e.lhs, ctx) + evaluate<T>(*e.rhs, ctx);
        case Expr::Kind::sub: return evaluate<T>(*e.lhs, ctx) - evaluate<T>(*e.rhs, ctx);
        case Expr::Kind::mul: return evaluate<T>(*e.lhs, ctx) * evaluate<T>(*e.rhs, ctx);
        case Expr::Kind::div: return ctx.divide(evaluate<T>(*e.lhs, ctx), evaluate<T>(*e.rhs, ctx));
        case Expr::Kind::neg: return -evaluate<T>(*e.lhs, ctx);
        case Expr::Kind::pow: return ctx.power(evaluate<T>(*e.lhs, ctx), e.exponent);
    }
    return ctx.number(0);
}

// Rational function in one variable over F_p; other identifiers are errors.
RatFun parse_ratfun(const std::string& text, u32 p, const std::string& var = "x");
// Polynomial in one variable over F_p (no division by non-constants).
Poly parse_poly(const std::string& text, u32 p, const std::string& var = "y");
// Polynomial in x and y over F_p.
BiPoly parse_bipoly(const std::string& text, u32 p);

}  // namespace hdr::alg
