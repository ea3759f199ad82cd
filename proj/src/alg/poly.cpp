#include "hdr/alg/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdr/simd/mod_kernels.hpp"

namespace hdr::alg {

Poly::Poly(u32 p, std::vector<u32> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p;
    trim();
}

Poly Poly::constant(u32 p, long long c) { return Poly(p, {reduce(c, p)}); }

Poly Poly::monomial(u32 p, long long c, int deg) {
    std::vector<u32> v(deg + 1, 0);
    v[deg] = reduce(c, p);
    return Poly(p, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u32 Poly::common_prime(const Poly& o) const {
    if (p_ && o.p_ && p_ != o.p_) throw std::invalid_argument("mixing polynomials over different primes");
    return p_ ? p_ : o.p_;
}

int Poly::valuation() const noexcept {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return -1;
}

Poly Poly::operator-() const {
    Poly r(p_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = neg_mod(c_[i], p_);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    p_ = common_prime(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    if (!o.c_.empty()) simd::active().add(c_.data(), o.c_.data(), o.c_.size(), p_);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    p_ = common_prime(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    if (!o.c_.empty()) simd::active().sub(c_.data(), o.c_.data(), o.c_.size(), p_);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    u32 p = a.common_prime(b);
    Poly r(p);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    const auto& k = simd::active();
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i]) k.axpy(r.c_.data() + i, b.c_.data(), a.c_[i], b.c_.size(), p);
    r.trim();
    return r;
}

Poly Poly::scaled(u32 s) const {
    Poly r = *this;
    if (!r.c_.empty()) simd::active().scale(r.c_.data(), s % p_, r.c_.size(), p_);
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (c_.empty()) return *this;
    Poly r(p_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    u32 p = common_prime(d);
    Poly r = *this;
    r.p_ = p;
    Poly q(p);
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(r.degree() - d.degree() + 1, 0);
    u32 li = inv_mod(d.lead(), p);
    const auto& k = simd::active();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        u32 f = mul_mod(r.lead(), li, p);
        q.c_[shift] = f;
        k.axpy(r.c_.data() + shift, d.c_.data(), neg_mod(f, p), d.c_.size(), p);
        r.trim();
    }
    q.trim();
    return {q, r};
}

u32 Poly::eval(u32 a) const noexcept {
    std::uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = (acc * a + c_[i]) % p_;
    return static_cast<u32>(acc);
}

Poly Poly::derivative() const {
    Poly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mul_mod(c_[i], static_cast<u32>(i % p_), p_);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(inv_mod(lead(), p_));
}

Poly Poly::compose(const Poly& g) const {
    Poly r(common_prime(g));
    for (size_t i = c_.size(); i-- > 0;) r = r * g + Poly::constant(r.p_, c_[i]);
    return r;
}

Poly Poly::substitute_power(int k) const {
    if (c_.empty() || k == 1) return *this;
    Poly r(p_);
    r.c_.assign((c_.size() - 1) * k + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

Poly Poly::scale_variable(u32 lambda) const {
    Poly r = *this;
    u32 pw = 1;
    for (auto& v : r.c_) {
        v = mul_mod(v, pw, p_);
        pw = mul_mod(pw, lambda % p_, p_);
    }
    r.trim();
    return r;
}

Poly Poly::reversed(int d) const {
    if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
    Poly r(p_);
    if (c_.empty()) return r;
    r.c_.assign(d + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[d - i] = c_[i];
    r.trim();
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty())
            out += std::to_string(c_[i]);
        else if (c_[i] == 1)
            out += mono;
        else
            out += std::to_string(c_[i]) + "*" + mono;
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    u32 p = a.prime() ? a.prime() : b.prime();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(p, 1), s1(p), t0(p), t1 = Poly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    u32 li = inv_mod(r0.lead(), p);
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

}  // namespace hdr::alg
