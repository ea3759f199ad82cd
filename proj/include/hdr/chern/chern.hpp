#pragma once

#include <vector>

#include "hdr/chern/graded.hpp"

namespace hdr::chern {

// Rank and Chern classes c_1..c_n (n = truncation) of a formal bundle.
struct ChernData {
    int rank = 1;
    RingPtr ring;
    std::vector<GradedClass> c;  // c[i-1] = c_i, homogeneous of degree i

    // c_0 = 1, c_i = 0 beyond the truncation
    GradedClass chern(int i) const;
    int truncation() const { return ring->truncation; }
};

// Validates rank and homogeneity; missing classes are zero.
ChernData make_chern_data(RingPtr ring, int rank, std::vector<GradedClass> classes);

// binom(a, k) for any integer a (generalized binomial coefficient).
Rational binomial(long a, int k);

GradedClass chern_character(const ChernData& cd);

// Degree-wise log(ch) - log(r).
GradedClass reduced_log_chern_character(const ChernData& cd);

// Delta_1..Delta_n (element i-1 holds Delta_i).
std::vector<GradedClass> higher_discriminants(const ChernData& cd);

// 2 r c_2 - (r-1) c_1^2 from the closed formula.
GradedClass classical_discriminant(const ChernData& cd);

struct EquivalenceReport {
    bool b1 = false;  // r^i c_i = binom(r, i) c_1^i for all i
    bool b2 = false;  // Delta_i = 0 for i >= 2
    bool b3 = false;  // log ch = log r + c_1 / r, tested as ch = r exp(c_1 / r)
};
EquivalenceReport check_equivalence_delta(const ChernData& cd);

// Chern data of E (x) L for a degree-one class l.
ChernData twist(const ChernData& cd, const GradedClass& l);

ChernData direct_sum(const std::vector<ChernData>& parts);

// Delta(E)/r - sum Delta(E^i)/r_i + (1/r) sum_{i<j} r_i r_j (mu_i - mu_j)^2
// for E the direct sum; identically zero.
GradedClass direct_sum_discriminant_identity(const std::vector<ChernData>& parts);

// binom(s, m) (c1 / r)^m
GradedClass binomial_chern(int r, int s, const GradedClass& c1, int m);

}  // namespace hdr::chern

#include "hdr/alg/random.hpp"

namespace hdr::chern {

// Homogeneous class of degree d with integer coefficients in [-bound, bound].
GradedClass random_class(alg::Rng& rng, const RingPtr& ring, int d, int bound = 3);

// Integral Chern data; when `log_free` the classes are binom(r, i)(c_1/r)^i
// with c_1 divisible by r, otherwise c_1..c_min(r,n) are random.
ChernData random_chern_data(alg::Rng& rng, const RingPtr& ring, int rank, bool log_free);

}  // namespace hdr::chern
