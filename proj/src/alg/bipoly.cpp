#include "hdr/alg/bipoly.hpp"

#include <stdexcept>

namespace hdr::alg {

BiPoly::BiPoly(u32 p, std::vector<Poly> coeffs_in_x) : p_(p), c_(std::move(coeffs_in_x)), zero_(p) {
    for (auto& c : c_)
        if (c.prime() == 0) c = Poly(p);
    trim();
}

BiPoly BiPoly::from_y(const Poly& f) { return BiPoly(f.prime(), {f}); }

BiPoly BiPoly::monomial(u32 p, long long c, int i, int j) {
    std::vector<Poly> v(i + 1, Poly(p));
    v[i] = Poly::monomial(p, c, j);
    return BiPoly(p, std::move(v));
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& BiPoly::coeff_x(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero_;
    return c_[i];
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    u32 p = a.p_ ? a.p_ : b.p_;
    std::vector<Poly> v(std::max(a.c_.size(), b.c_.size()), Poly(p));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff_x(i) + b.coeff_x(i);
    return BiPoly(p, std::move(v));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    u32 p = a.p_ ? a.p_ : b.p_;
    if (a.is_zero() || b.is_zero()) return BiPoly(p);
    std::vector<Poly> v(a.c_.size() + b.c_.size() - 1, Poly(p));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return BiPoly(p, std::move(v));
}

BiPoly BiPoly::d_dx() const {
    std::vector<Poly> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i].scaled(static_cast<u32>(i % p_)));
    return BiPoly(p_, std::move(v));
}

BiPoly BiPoly::d_dy() const {
    std::vector<Poly> v;
    for (const auto& c : c_) v.push_back(c.derivative());
    return BiPoly(p_, std::move(v));
}

BiPoly BiPoly::frobenius() const {
    if (c_.empty()) return *this;
    std::vector<Poly> v((c_.size() - 1) * p_ + 1, Poly(p_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * p_] = c_[i].substitute_power(p_);
    return BiPoly(p_, std::move(v));
}

std::string BiPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const auto& cy = c_[i].coeffs();
        for (std::size_t j = cy.size(); j-- > 0;) {
            if (!cy[j]) continue;
            std::string mono;
            if (i) mono = i == 1 ? "x" : "x^" + std::to_string(i);
            if (j) {
                if (!mono.empty()) mono += "*";
                mono += j == 1 ? "y" : "y^" + std::to_string(j);
            }
            if (!out.empty()) out += " + ";
            if (mono.empty())
                out += std::to_string(cy[j]);
            else if (cy[j] == 1)
                out += mono;
            else
                out += std::to_string(cy[j]) + "*" + mono;
        }
    }
    return out;
}

}  // namespace hdr::alg
