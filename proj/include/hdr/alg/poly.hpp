#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hdr/alg/fp.hpp"

namespace hdr::alg {

// Univariate polynomial over F_p, coefficients little-endian, trimmed.
// p == 0 marks a default-constructed zero that adopts the prime of the
// other operand.
class Poly {
public:
    Poly() = default;
    explicit Poly(u32 p) : p_(p) {}
    Poly(u32 p, std::vector<u32> coeffs);

    static Poly constant(u32 p, long long c);
    static Poly monomial(u32 p, long long c, int deg);
    static Poly x(u32 p) { return monomial(p, 1, 1); }

    u32 prime() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    u32 coeff(int i) const noexcept { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    u32 lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<u32>& coeffs() const noexcept { return c_; }
    // index of the lowest nonzero coefficient; -1 for zero
    int valuation() const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(u32 s) const;
    Poly shifted(int k) const;  // times x^k, k >= 0
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& f) const { return (f % *this).is_zero(); }

    u32 eval(u32 a) const noexcept;
    Poly derivative() const;
    Poly monic() const;
    Poly compose(const Poly& g) const;
    Poly substitute_power(int k) const;   // f(x^k)
    Poly scale_variable(u32 lambda) const;  // f(lambda * x)
    Poly reversed(int d) const;           // x^d f(1/x), requires d >= degree

    std::string to_string(const std::string& var = "x") const;

private:
    u32 p_ = 0;
    std::vector<u32> c_;
    void trim();
    u32 common_prime(const Poly& o) const;
};

Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
Xgcd xgcd(const Poly& a, const Poly& b);

}  // namespace hdr::alg
