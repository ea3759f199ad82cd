#pragma once

#include <string>
#include <vector>

#include "hdr/alg/poly.hpp"

namespace hdr::alg {

// Polynomial in x whose coefficients are polynomials in y, so restricting
// to x = 0 is taking the constant coefficient.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(u32 p) : p_(p), zero_(p) {}
    BiPoly(u32 p, std::vector<Poly> coeffs_in_x);

    static BiPoly from_y(const Poly& f);  // f(y)
    static BiPoly constant(u32 p, long long c) { return from_y(Poly::constant(p, c)); }
    // c * x^i * y^j
    static BiPoly monomial(u32 p, long long c, int i, int j);

    u32 prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree_x() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Poly& coeff_x(int i) const;
    const std::vector<Poly>& coeffs() const noexcept { return c_; }

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    Poly at_x0() const { return coeff_x(0); }
    BiPoly d_dx() const;
    BiPoly d_dy() const;
    BiPoly frobenius() const;  // f(x^p, y^p), coefficients fixed

    std::string to_string() const;

private:
    u32 p_ = 0;
    std::vector<Poly> c_;
    Poly zero_;
    void trim();
};

inline bool is_zero(const BiPoly& a) { return a.is_zero(); }
inline BiPoly one_like(const BiPoly& a) { return BiPoly::constant(a.prime(), 1); }
inline std::string to_string(const BiPoly& a) { return a.to_string(); }

}  // namespace hdr::alg
