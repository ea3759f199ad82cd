#pragma once

#include <climits>
#include <string>

#include "hdr/alg/poly.hpp"

namespace hdr::alg {

// num/den over F_p with gcd 1 and monic denominator, so equality is
// coefficient equality.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(u32 p) : num_(p), den_(Poly::constant(p, 1)) {}
    RatFun(const Poly& num);  // NOLINT: polynomials embed
    RatFun(const Poly& num, const Poly& den);

    static RatFun constant(u32 p, long long c) { return RatFun(Poly::constant(p, c)); }
    static RatFun x(u32 p) { return RatFun(Poly::x(p)); }
    // c * x^k for any integer k
    static RatFun laurent_monomial(u32 p, long long c, int k);

    u32 prime() const noexcept { return num_.prime() ? num_.prime() : den_.prime(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() <= 0; }
    // den is a power of x
    bool is_laurent() const noexcept;
    bool is_constant() const noexcept { return is_polynomial() && num_.is_constant(); }

    RatFun operator-() const { return RatFun(-num_, den_, true); }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFun inverse() const;
    RatFun pow(long long e) const;
    RatFun derivative() const;

    // value at a in F_p; throws if a is a pole
    u32 eval(u32 a) const;
    // order of vanishing at x = a (negative for poles, INT_MAX for zero)
    int order_at(u32 a) const;
    // order at infinity, i.e. order of f(1/y) at y = 0
    int order_at_infinity() const;

    RatFun invert_variable() const;          // f(1/x)
    RatFun substitute_power(int k) const;    // f(x^k)
    RatFun scale_variable(u32 lambda) const; // f(lambda x)

    std::string to_string(const std::string& var = "x") const;

private:
    Poly num_, den_;
    RatFun(Poly num, Poly den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
};

}  // namespace hdr::alg
