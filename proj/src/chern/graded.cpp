#include "hdr/chern/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdr/alg/parse.hpp"
#include "hdr/errors.hpp"

namespace hdr::chern {

using alg::frac;

int GradedRing::degree_of(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees[i];
    return d;
}

std::vector<Exponents> GradedRing::monomials_of_degree(int d) const {
    std::vector<Exponents> out;
    Exponents e(names.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == names.size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int k = left / degrees[i]; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k * degrees[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

int GradedRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees, int truncation) {
    if (names.size() != degrees.size()) throw InputError("generator names and degrees differ in length");
    if (truncation < 1) throw InputError("truncation must be at least 1");
    for (int d : degrees)
        if (d < 1) throw InputError("generator degrees must be positive");
    auto r = std::make_shared<GradedRing>();
    r->names = std::move(names);
    r->degrees = std::move(degrees);
    r->truncation = truncation;
    return r;
}

void GradedClass::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    if (ring_->degree_of(e) > ring_->truncation) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

GradedClass GradedClass::constant(RingPtr ring, const Rational& c) {
    GradedClass g(ring);
    g.add_term(Exponents(ring->names.size(), 0), c);
    return g;
}

GradedClass GradedClass::generator(RingPtr ring, const std::string& name) {
    int i = ring->index_of(name);
    if (i < 0) throw InputError("unknown generator '" + name + "'");
    Exponents e(ring->names.size(), 0);
    e[i] = 1;
    return monomial(ring, e, 1);
}

GradedClass GradedClass::monomial(RingPtr ring, const Exponents& e, const Rational& c) {
    GradedClass g(std::move(ring));
    g.add_term(e, c);
    return g;
}

Rational GradedClass::constant_term() const {
    if (!ring_) return 0;
    auto it = t_.find(Exponents(ring_->names.size(), 0));
    return it == t_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::component(int d) const {
    GradedClass g(ring_);
    for (const auto& [e, c] : t_)
        if (ring_->degree_of(e) == d) g.t_.emplace(e, c);
    return g;
}

bool GradedClass::is_homogeneous(int d) const {
    for (const auto& [e, c] : t_)
        if (ring_->degree_of(e) != d) return false;
    return true;
}

bool GradedClass::has_integer_coefficients() const {
    for (const auto& [e, c] : t_)
        if (c.get_den() != 1) return false;
    return true;
}

GradedClass GradedClass::operator-() const {
    GradedClass g = *this;
    for (auto& [e, c] : g.t_) c = -c;
    return g;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    GradedClass g(a.ring_ ? a.ring_ : b.ring_);
    g.t_ = a.t_;
    for (const auto& [e, c] : b.t_) g.add_term(e, c);
    return g;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    GradedClass g(a.ring_ ? a.ring_ : b.ring_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            g.add_term(e, ca * cb);
        }
    return g;
}

GradedClass operator*(const Rational& s, const GradedClass& a) {
    GradedClass g(a.ring_);
    if (sgn(s) == 0) return g;
    g.t_ = a.t_;
    for (auto& [e, c] : g.t_) c *= s;
    return g;
}

GradedClass GradedClass::pow(int k) const {
    GradedClass r = constant(ring_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string GradedClass::to_string() const {
    if (t_.empty()) return "0";
    // by degree, then exponent vectors in descending lexicographic order
    std::vector<std::pair<int, const std::pair<const Exponents, Rational>*>> order;
    for (const auto& kv : t_) order.push_back({ring_->degree_of(kv.first), &kv});
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second->first > y.second->first;
    });
    std::string out;
    for (const auto& [deg, kv] : order) {
        const auto& [e, c] = *kv;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = abs(c);
        std::string coeff = a.get_str();
        std::string term;
        if (mono.empty())
            term = coeff;
        else if (a == 1)
            term = mono;
        else
            term = coeff + "*" + mono;
        if (out.empty())
            out = sgn(c) < 0 ? "-" + term : term;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

GradedClass exp_series(const GradedClass& x) {
    if (sgn(x.constant_term()) != 0) throw std::invalid_argument("exp_series needs a nilpotent argument");
    const RingPtr& ring = x.ring();
    GradedClass sum = GradedClass::constant(ring, 1), term = sum;
    for (int k = 1; k <= ring->truncation; ++k) {
        term = frac(1, k) * (term * x);
        sum = sum + term;
    }
    return sum;
}

GradedClass log1p_series(const GradedClass& x) {
    if (sgn(x.constant_term()) != 0) throw std::invalid_argument("log1p_series needs a nilpotent argument");
    const RingPtr& ring = x.ring();
    GradedClass sum(ring), pw = GradedClass::constant(ring, 1);
    for (int m = 1; m <= ring->truncation; ++m) {
        pw = pw * x;
        sum = sum + frac(m % 2 ? 1 : -1, m) * pw;
    }
    return sum;
}

namespace {

struct ClassCtx {
    RingPtr ring;
    GradedClass number(const mpz_class& z) const { return GradedClass::constant(ring, Rational(z)); }
    GradedClass variable(const std::string& n) const { return GradedClass::generator(ring, n); }
    GradedClass divide(const GradedClass& a, const GradedClass& b) const {
        Rational c = b.constant_term();
        if (b != GradedClass::constant(ring, c) || sgn(c) == 0)
            throw InputError("classes may only be divided by nonzero integers");
        return Rational(1) / c * a;
    }
    GradedClass power(const GradedClass& a, long e) const {
        if (e < 0) throw InputError("negative exponent in a class expression");
        return a.pow(static_cast<int>(e));
    }
};

}  // namespace

GradedClass parse_class(const RingPtr& ring, const std::string& text) {
    return alg::evaluate<GradedClass>(*alg::parse_expr(text), ClassCtx{ring});
}

}  // namespace hdr::chern
