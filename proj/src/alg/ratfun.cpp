#include "hdr/alg/ratfun.hpp"

#include <stdexcept>

namespace hdr::alg {

RatFun::RatFun(const Poly& num) : num_(num), den_(Poly::constant(num.prime(), 1)) {}

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RatFun RatFun::laurent_monomial(u32 p, long long c, int k) {
    if (k >= 0) return RatFun(Poly::monomial(p, c, k));
    return RatFun(Poly::constant(p, c), Poly::monomial(p, 1, -k));
}

void RatFun::normalize() {
    u32 p = prime();
    if (num_.is_zero()) {
        num_ = Poly(p);
        den_ = Poly::constant(p, 1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    u32 li = inv_mod(den_.lead(), p);
    if (li != 1) {
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

bool RatFun::is_laurent() const noexcept {
    return den_.valuation() == den_.degree();
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(a.prime() ? a.prime() : b.prime());
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r = constant(prime(), 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

u32 RatFun::eval(u32 a) const {
    if (is_zero()) return 0;
    u32 p = prime();
    u32 d = den_.eval(a % p);
    if (d == 0) throw std::domain_error("evaluation at a pole x = " + std::to_string(a));
    return mul_mod(num_.eval(a % p), inv_mod(d, p), p);
}

namespace {
int order_of(const Poly& f, u32 a) {
    if (f.is_zero()) return INT_MAX;
    Poly lin(f.prime(), {neg_mod(a % f.prime(), f.prime()), 1});
    int k = 0;
    Poly g = f;
    for (;;) {
        auto [q, r] = g.divmod(lin);
        if (!r.is_zero()) return k;
        g = std::move(q);
        ++k;
    }
}
}  // namespace

int RatFun::order_at(u32 a) const {
    if (is_zero()) return INT_MAX;
    return order_of(num_, a) - order_of(den_, a);
}

int RatFun::order_at_infinity() const {
    if (is_zero()) return INT_MAX;
    return den_.degree() - num_.degree();
}

RatFun RatFun::invert_variable() const {
    if (is_zero()) return *this;
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed(dn), d = den_.reversed(dd);
    if (dd >= dn)
        return RatFun(n.shifted(dd - dn), d);
    return RatFun(n, d.shifted(dn - dd));
}

RatFun RatFun::substitute_power(int k) const {
    return RatFun(num_.substitute_power(k), den_.substitute_power(k));
}

RatFun RatFun::scale_variable(u32 lambda) const {
    return RatFun(num_.scale_variable(lambda), den_.scale_variable(lambda));
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace hdr::alg
