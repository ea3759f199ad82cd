#include "hdr/alg/parse.hpp"

#include <cctype>

#include "hdr/errors.hpp"

namespace hdr::alg {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Kind k, ExprPtr a, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = node(Expr::Kind::add, e, term());
            else if (eat('-'))
                e = node(Expr::Kind::sub, e, term());
            else
                return e;
        }
    }
    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*'))
                e = node(Expr::Kind::mul, e, unary());
            else if (eat('/'))
                e = node(Expr::Kind::div, e, unary());
            else
                return e;
        }
    }
    ExprPtr unary() {
        if (eat('-')) return node(Expr::Kind::neg, unary());
        if (eat('+')) return unary();
        return power();
    }
    ExprPtr power() {
        ExprPtr base = atom();
        if (!eat('^')) return base;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->lhs = base;
        e->exponent = std::stol(s_.substr(start, pos_ - start)) * (neg ? -1 : 1);
        return e;
    }
    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        auto e = std::make_shared<Expr>();
        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            e->kind = Expr::Kind::number;
            e->number = mpz_class(s_.substr(start, pos_ - start));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            e->kind = Expr::Kind::variable;
            e->name = s_.substr(start, pos_ - start);
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

u32 mpz_mod(const mpz_class& z, u32 p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<u32>(r.get_ui());
}

struct RatFunCtx {
    u32 p;
    std::string var;
    RatFun number(const mpz_class& z) const { return RatFun::constant(p, mpz_mod(z, p)); }
    RatFun variable(const std::string& n) const {
        if (n != var) throw InputError("unknown variable '" + n + "' (expected '" + var + "')");
        return RatFun::x(p);
    }
    RatFun divide(const RatFun& a, const RatFun& b) const {
        if (b.is_zero()) throw InputError("division by zero mod " + std::to_string(p));
        return a / b;
    }
    RatFun power(const RatFun& a, long e) const {
        if (e < 0 && a.is_zero()) throw InputError("negative power of zero");
        return a.pow(e);
    }
};

struct BiPolyCtx {
    u32 p;
    BiPoly number(const mpz_class& z) const { return BiPoly::constant(p, mpz_mod(z, p)); }
    BiPoly variable(const std::string& n) const {
        if (n == "x") return BiPoly::monomial(p, 1, 1, 0);
        if (n == "y") return BiPoly::monomial(p, 1, 0, 1);
        throw InputError("unknown variable '" + n + "' (expected x or y)");
    }
    BiPoly divide(const BiPoly& a, const BiPoly& b) const {
        if (b.degree_x() != 0 || b.coeff_x(0).degree() != 0)
            throw InputError("division by a non-constant in a polynomial expression");
        return a * BiPoly::constant(p, inv_mod(b.coeff_x(0).lead(), p));
    }
    BiPoly power(const BiPoly& a, long e) const {
        if (e < 0) throw InputError("negative exponent in a polynomial expression");
        BiPoly r = BiPoly::constant(p, 1);
        for (long i = 0; i < e; ++i) r = r * a;
        return r;
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

void collect_variables(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == Expr::Kind::variable) {
        for (const auto& n : out)
            if (n == e.name) return;
        out.push_back(e.name);
    }
    if (e.lhs) collect_variables(*e.lhs, out);
    if (e.rhs) collect_variables(*e.rhs, out);
}

RatFun parse_ratfun(const std::string& text, u32 p, const std::string& var) {
    return evaluate<RatFun>(*parse_expr(text), RatFunCtx{p, var});
}

Poly parse_poly(const std::string& text, u32 p, const std::string& var) {
    RatFun f = parse_ratfun(text, p, var);
    if (!f.is_polynomial()) throw InputError("'" + text + "' is not a polynomial in " + var);
    return f.num();
}

BiPoly parse_bipoly(const std::string& text, u32 p) {
    return evaluate<BiPoly>(*parse_expr(text), BiPolyCtx{p});
}

}  // namespace hdr::alg
