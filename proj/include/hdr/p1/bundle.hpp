#pragma once

// Vector bundles on P^1 over F_p. Chart 0 has coordinate x, chart 1 has
// y = 1/x, and a section with chart-0 coordinates s0 has chart-1
// coordinates s1 = T(x) s0. O(a) has transition x^{-a}, so H^0(O(a)) is
// spanned by 1, x, ..., x^a in chart 0.

#include <vector>

#include "hdr/alg/linalg.hpp"
#include "hdr/alg/snf.hpp"

namespace hdr::p1 {

using alg::Matrix;
using alg::ModMatrix;
using alg::Poly;
using alg::RatFun;
using alg::Rational;
using alg::u32;
using RMat = Matrix<RatFun>;
using PMat = Matrix<Poly>;

struct P1Bundle {
    u32 p = 0;
    RMat transition;  // Laurent entries, det = c x^k

    std::size_t rank() const { return transition.rows(); }
};

// Checks the transition is square with Laurent entries and monomial
// determinant; throws InputError naming det T otherwise.
P1Bundle make_bundle(u32 p, RMat transition);
P1Bundle direct_sum_of_line_bundles(u32 p, const std::vector<int>& degrees);

// exponent k of det T = c x^k
int det_exponent(const P1Bundle& b);

struct Splitting {
    std::vector<int> type;  // a_1 >= ... >= a_r
    RMat chart1_change;     // B over F_p[x^-1]
    RMat chart0_change;     // A over F_p[x]
};

// B T A = diag(x^{-a_1}, ..., x^{-a_r}) with B in GL_r(F_p[x^-1]) and
// A in GL_r(F_p[x]).
Splitting birkhoff_split(const P1Bundle& b);

RMat diagonal_transition(u32 p, const std::vector<int>& type);

struct DegreeSlope {
    int degree;
    Rational slope;
};
DegreeSlope degree_and_slope(const P1Bundle& b);

// Columns span H^0(E(d)) in chart-0 coordinates.
PMat global_sections(const P1Bundle& b, int d);
std::size_t h0_dimension(const std::vector<int>& type, int d);
// Independent count from the Cech condition on bounded-degree coefficients.
std::size_t h0_brute_force(const P1Bundle& b, int d);

P1Bundle frobenius_pullback(const P1Bundle& b);
P1Bundle twist(const P1Bundle& b, int d);

// A subbundle, given by saturated frames in both charts.
struct SubBundle {
    RMat chart0;      // r x s, polynomial in x, saturated over F_p[x]
    RMat chart1;      // r x s, polynomial in 1/x, saturated over F_p[1/x]
    RMat transition;  // s x s: T * chart0 = chart1 * transition
    int degree = 0;

    std::size_t rank() const { return chart0.cols(); }
    Rational slope() const { return alg::frac(degree, static_cast<long>(rank())); }
};

// Saturation of the F_p(x)-span of the columns of w (generic fibre).
SubBundle subbundle_from_span(const P1Bundle& b, const RMat& w);

struct HNStep {
    SubBundle sub;
    std::vector<int> type;  // splitting type of the step
};
// 0 = F_0 < F_1 < ... < F_k = E; only the nonzero steps are returned.
std::vector<HNStep> hn_filtration_plain(const P1Bundle& b);

int max_subsheaf_degree(const std::vector<int>& type, std::size_t s);
int max_subsheaf_degree(const P1Bundle& b, std::size_t s);

// Frames adapted to a chain of nested subbundles: C1^{-1} T C0 is block
// upper triangular, the first rank(F_1) columns span F_1, and so on.
struct AdaptedFrames {
    RMat chart0;  // over F_p[x], unimodular
    RMat chart1;  // over F_p[1/x], unimodular
    RMat transition;
    std::vector<std::size_t> offsets;  // start column of each graded piece, plus r at the end
};
AdaptedFrames adapted_frames(const P1Bundle& b, const std::vector<RMat>& nested_spans);

// ---- chart conversions ----

// f(x) -> f(1/y) as a polynomial in y; throws if not polynomial.
PMat to_chart1_poly(const RMat& m);
RMat from_chart1_poly(const PMat& m);
PMat to_chart0_poly(const RMat& m);
// Scales each column by the lcm of its denominators.
PMat clear_column_denominators(const RMat& m);
bool is_polynomial_matrix(const RMat& m);
bool is_chart1_polynomial(const RMat& m);  // entries in F_p[1/x]
bool is_laurent_matrix(const RMat& m);
// largest power of x appearing in the entries (after writing them as Laurent)
int max_x_exponent(const RMat& m);
int max_pole_order_at_zero(const RMat& m);

}  // namespace hdr::p1
