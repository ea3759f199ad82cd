#include "hdr/chern/chern.hpp"

#include "hdr/errors.hpp"

namespace hdr::chern {

using alg::frac;

GradedClass ChernData::chern(int i) const {
    if (i == 0) return GradedClass::constant(ring, 1);
    if (i < 0 || i > static_cast<int>(c.size())) return GradedClass(ring);
    return c[i - 1];
}

ChernData make_chern_data(RingPtr ring, int rank, std::vector<GradedClass> classes) {
    if (rank < 1) throw InputError("rank must be at least 1");
    if (static_cast<int>(classes.size()) > ring->truncation)
        throw InputError("more Chern classes than the truncation degree");
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!classes[i].is_homogeneous(static_cast<int>(i) + 1))
            throw InputError("c_" + std::to_string(i + 1) + " = " + classes[i].to_string() +
                             " is not homogeneous of degree " + std::to_string(i + 1));
    while (static_cast<int>(classes.size()) < ring->truncation) classes.emplace_back(ring);
    for (auto& g : classes)
        if (!g.ring()) g = GradedClass(ring);
    return ChernData{rank, std::move(ring), std::move(classes)};
}

Rational binomial(long a, int k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r = r * Rational(a - i) / Rational(i + 1);
    return r;
}

GradedClass chern_character(const ChernData& cd) {
    // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    const int n = cd.truncation();
    std::vector<GradedClass> pw(n + 1, GradedClass(cd.ring));
    pw[0] = GradedClass::constant(cd.ring, cd.rank);
    GradedClass ch = pw[0];
    Rational fact = 1;
    for (int k = 1; k <= n; ++k) {
        GradedClass acc(cd.ring);
        for (int i = 1; i < k; ++i) acc = acc + Rational(i % 2 ? 1 : -1) * (cd.chern(i) * pw[k - i]);
        acc = acc + Rational(k % 2 ? k : -k) * cd.chern(k);
        pw[k] = acc;
        fact *= k;
        ch = ch + Rational(1) / fact * acc;
    }
    return ch;
}

GradedClass reduced_log_chern_character(const ChernData& cd) {
    GradedClass ch = chern_character(cd);
    GradedClass u = frac(1, cd.rank) * (ch - GradedClass::constant(cd.ring, cd.rank));
    return log1p_series(u);
}

std::vector<GradedClass> higher_discriminants(const ChernData& cd) {
    // log ch = log r + sum_i (-1)^{i+1} Delta_i / (i! r^i)
    GradedClass l = reduced_log_chern_character(cd);
    std::vector<GradedClass> out;
    Rational scale = 1;
    for (int i = 1; i <= cd.truncation(); ++i) {
        scale *= Rational(i * cd.rank);
        out.push_back(Rational(i % 2 ? 1 : -1) * scale * l.component(i));
    }
    return out;
}

GradedClass classical_discriminant(const ChernData& cd) {
    return Rational(2 * cd.rank) * cd.chern(2) - Rational(cd.rank - 1) * cd.chern(1).pow(2);
}

EquivalenceReport check_equivalence_delta(const ChernData& cd) {
    EquivalenceReport rep;
    const int r = cd.rank, n = cd.truncation();
    rep.b1 = true;
    GradedClass c1 = cd.chern(1);
    Rational rp = 1;
    for (int i = 1; i <= n && rep.b1; ++i) {
        rp *= r;
        rep.b1 = rp * cd.chern(i) == binomial(r, i) * c1.pow(i);
    }
    auto delta = higher_discriminants(cd);
    rep.b2 = true;
    for (int i = 2; i <= n; ++i) rep.b2 = rep.b2 && delta[i - 1].is_zero();
    rep.b3 = chern_character(cd) == Rational(r) * exp_series(frac(1, r) * c1);
    return rep;
}

ChernData twist(const ChernData& cd, const GradedClass& l) {
    if (!l.is_homogeneous(1)) throw InputError("twisting class must have degree 1");
    // c_i(E (x) L) = sum_j binom(r - j, i - j) c_j l^{i-j}
    std::vector<GradedClass> c;
    for (int i = 1; i <= cd.truncation(); ++i) {
        GradedClass acc(cd.ring);
        for (int j = 0; j <= i; ++j) acc = acc + binomial(cd.rank - j, i - j) * (cd.chern(j) * l.pow(i - j));
        c.push_back(acc);
    }
    return ChernData{cd.rank, cd.ring, std::move(c)};
}

ChernData direct_sum(const std::vector<ChernData>& parts) {
    if (parts.empty()) throw InputError("direct sum of no parts");
    const RingPtr& ring = parts[0].ring;
    GradedClass total = GradedClass::constant(ring, 1);
    int rank = 0;
    for (const auto& part : parts) {
        GradedClass c = GradedClass::constant(ring, 1);
        for (int i = 1; i <= part.truncation(); ++i) c = c + part.chern(i);
        total = total * c;
        rank += part.rank;
    }
    std::vector<GradedClass> c;
    for (int i = 1; i <= ring->truncation; ++i) c.push_back(total.component(i));
    return ChernData{rank, ring, std::move(c)};
}

GradedClass direct_sum_discriminant_identity(const std::vector<ChernData>& parts) {
    if (parts.size() < 2) throw InputError("direct-sum identity needs at least two parts");
    ChernData e = direct_sum(parts);
    const int r = e.rank;
    GradedClass res = frac(1, r) * classical_discriminant(e);
    for (const auto& part : parts) res = res - frac(1, part.rank) * classical_discriminant(part);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            GradedClass d = frac(1, parts[i].rank) * parts[i].chern(1) - frac(1, parts[j].rank) * parts[j].chern(1);
            res = res + frac(parts[i].rank * parts[j].rank, r) * d.pow(2);
        }
    return res;
}

GradedClass binomial_chern(int r, int s, const GradedClass& c1, int m) {
    if (s < 1 || s > r || m < 1) throw InputError("binomial_chern needs 1 <= s <= r and m >= 1");
    return binomial(s, m) * (frac(1, r) * c1).pow(m);
}

}  // namespace hdr::chern

namespace hdr::chern {

GradedClass random_class(alg::Rng& rng, const RingPtr& ring, int d, int bound) {
    GradedClass g(ring);
    for (const auto& e : ring->monomials_of_degree(d))
        g = g + GradedClass::monomial(ring, e, alg::random_int(rng, -bound, bound));
    return g;
}

ChernData random_chern_data(alg::Rng& rng, const RingPtr& ring, int rank, bool log_free) {
    std::vector<GradedClass> c;
    if (log_free) {
        GradedClass mu = random_class(rng, ring, 1, 2);
        for (int i = 1; i <= ring->truncation; ++i) c.push_back(binomial(rank, i) * mu.pow(i));
    } else {
        for (int i = 1; i <= ring->truncation; ++i)
            c.push_back(i <= rank ? random_class(rng, ring, i) : GradedClass(ring));
    }
    return make_chern_data(ring, rank, std::move(c));
}

}  // namespace hdr::chern
