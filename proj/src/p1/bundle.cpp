#include "hdr/p1/bundle.hpp"

#include <algorithm>
#include <numeric>

#include "hdr/errors.hpp"

namespace hdr::p1 {

namespace {

bool is_monomial(const Poly& f) { return !f.is_zero() && f.valuation() == f.degree(); }

// coefficient of x^e in a Laurent polynomial
u32 laurent_coeff(const RatFun& f, int e) { return f.num().coeff(e + f.den().degree()); }

}  // namespace

bool is_polynomial_matrix(const RMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_polynomial()) return false;
    return true;
}

bool is_laurent_matrix(const RMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_laurent()) return false;
    return true;
}

bool is_chart1_polynomial(const RMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).invert_variable().is_polynomial()) return false;
    return true;
}

PMat to_chart0_poly(const RMat& m) { return alg::to_poly(m); }

PMat to_chart1_poly(const RMat& m) {
    return m.map([](const RatFun& f) {
        RatFun g = f.invert_variable();
        if (!g.is_polynomial()) throw ContractViolation(f.to_string() + " is not regular on the chart at infinity");
        return g.num();
    });
}

RMat from_chart1_poly(const PMat& m) {
    return m.map([](const Poly& g) { return RatFun(g).invert_variable(); });
}

PMat clear_column_denominators(const RMat& m) {
    u32 p = m.zero().prime();
    PMat out(m.rows(), m.cols(), Poly(p));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Poly l = Poly::constant(p, 1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Poly& d = m(i, j).den();
            l = l * (d / alg::gcd(l, d));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).num() * (l / m(i, j).den());
    }
    return out;
}

int max_x_exponent(const RMat& m) {
    int best = INT_MIN;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RatFun& f = m(i, j);
            if (f.is_zero()) continue;
            if (!f.is_laurent()) throw ContractViolation("entry " + f.to_string() + " is not a Laurent polynomial");
            best = std::max(best, f.num().degree() - f.den().degree());
        }
    return best;
}

int max_pole_order_at_zero(const RMat& m) {
    int best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, m(i, j).den().degree());
    return best;
}

P1Bundle make_bundle(u32 p, RMat transition) {
    alg::require_supported_prime(p);
    if (transition.rows() != transition.cols() || transition.rows() == 0)
        throw InputError("transition matrix must be square and nonempty");
    if (!is_laurent_matrix(transition)) throw InputError("transition entries must be Laurent polynomials in x");
    RatFun d = alg::det(transition);
    if (d.is_zero() || !is_monomial(d.num()))
        throw InputError("transition is not invertible over F_p[x, 1/x]: det T = " + d.to_string());
    return P1Bundle{p, std::move(transition)};
}

RMat diagonal_transition(u32 p, const std::vector<int>& type) {
    RMat t(type.size(), type.size(), RatFun(p));
    for (std::size_t i = 0; i < type.size(); ++i) t(i, i) = RatFun::laurent_monomial(p, 1, -type[i]);
    return t;
}

P1Bundle direct_sum_of_line_bundles(u32 p, const std::vector<int>& degrees) {
    return make_bundle(p, diagonal_transition(p, degrees));
}

int det_exponent(const P1Bundle& b) {
    RatFun d = alg::det(b.transition);
    return d.num().degree() - d.den().degree();
}

Splitting birkhoff_split(const P1Bundle& b) {
    const u32 p = b.p;
    const std::size_t r = b.rank();
    const int shift = max_pole_order_at_zero(b.transition);
    RatFun xn = RatFun::laurent_monomial(p, 1, shift);
    PMat q = to_chart0_poly(xn * b.transition);
    PMat a = PMat::identity(r, Poly(p));

    std::vector<int> deg(r);
    for (;;) {
        for (std::size_t j = 0; j < r; ++j) {
            deg[j] = -1;
            for (std::size_t i = 0; i < r; ++i) deg[j] = std::max(deg[j], q(i, j).degree());
            if (deg[j] < 0) throw ContractViolation("zero column during column reduction");
        }
        ModMatrix lead(r, r, p);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) lead.at(i, j) = q(i, j).coeff(deg[j]);
        ModMatrix k = alg::kernel(lead);
        if (k.cols() == 0) break;
        std::size_t j0 = r;
        for (std::size_t j = 0; j < r; ++j)
            if (k.at(j, 0) && (j0 == r || deg[j] > deg[j0])) j0 = j;
        // col_j0 <- sum_j c_j x^{deg j0 - deg j} col_j; the top coefficients cancel
        std::vector<Poly> nq(r, Poly(p)), na(r, Poly(p));
        for (std::size_t j = 0; j < r; ++j) {
            if (!k.at(j, 0)) continue;
            Poly m = Poly::monomial(p, k.at(j, 0), deg[j0] - deg[j]);
            for (std::size_t i = 0; i < r; ++i) {
                nq[i] += m * q(i, j);
                na[i] += m * a(i, j);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            q(i, j0) = nq[i];
            a(i, j0) = na[i];
        }
    }

    RMat qhat = alg::to_ratfun(q);
    for (std::size_t j = 0; j < r; ++j) qhat.col_scale(j, RatFun::laurent_monomial(p, 1, -deg[j]));
    auto binv = alg::inverse_matrix(qhat);
    if (!binv) throw ContractViolation("column-reduced matrix lost invertibility");

    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return deg[i] < deg[j]; });

    Splitting s;
    RMat aa = alg::to_ratfun(a);
    s.chart0_change = aa.columns(order);
    s.chart1_change = binv->transpose().columns(order).transpose();
    for (std::size_t j : order) s.type.push_back(shift - deg[j]);

    if (s.chart1_change * b.transition * s.chart0_change != diagonal_transition(p, s.type))
        throw ContractViolation("Birkhoff factorization failed to diagonalize");
    return s;
}

DegreeSlope degree_and_slope(const P1Bundle& b) {
    int d = -det_exponent(b);
    return {d, alg::frac(d, static_cast<long>(b.rank()))};
}

std::size_t h0_dimension(const std::vector<int>& type, int d) {
    std::size_t n = 0;
    for (int a : type) n += std::max(0, a + d + 1);
    return n;
}

PMat global_sections(const P1Bundle& b, int d) {
    Splitting s = birkhoff_split(b);
    PMat a = to_chart0_poly(s.chart0_change);
    const std::size_t r = b.rank();
    PMat out(r, h0_dimension(s.type, d), Poly(b.p));
    std::size_t col = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j <= s.type[i] + d; ++j, ++col)
            for (std::size_t k = 0; k < r; ++k) out(k, col) = a(k, i).shifted(j);
    return out;
}

std::size_t h0_brute_force(const P1Bundle& b, int d) {
    const u32 p = b.p;
    const std::size_t r = b.rank();
    auto tinv = alg::inverse_matrix(b.transition);
    const int bound = d + max_x_exponent(*tinv);
    if (bound < 0) return 0;
    RMat t = RatFun::laurent_monomial(p, 1, -d) * b.transition;
    const int top = max_x_exponent(t) + bound;
    if (top <= 0) return r * (bound + 1);
    // unknowns s_{i,m}; equations: coefficients of x^e, e = 1..top, in each row
    ModMatrix eq(r * top, r * (bound + 1), p);
    for (std::size_t i = 0; i < r; ++i)
        for (int m = 0; m <= bound; ++m)
            for (std::size_t row = 0; row < r; ++row) {
                RatFun v = t(row, i) * RatFun::laurent_monomial(p, 1, m);
                if (v.is_zero()) continue;
                for (int e = 1; e <= top; ++e) eq.at(row * top + (e - 1), i * (bound + 1) + m) = laurent_coeff(v, e);
            }
    return r * (bound + 1) - alg::rank(eq);
}

P1Bundle frobenius_pullback(const P1Bundle& b) {
    return P1Bundle{b.p, b.transition.map([&](const RatFun& f) { return f.substitute_power(b.p); })};
}

P1Bundle twist(const P1Bundle& b, int d) {
    return P1Bundle{b.p, RatFun::laurent_monomial(b.p, 1, -d) * b.transition};
}

namespace {

PMat chart1_saturation(const P1Bundle& b, const RMat& chart0) {
    RMat tw = b.transition * chart0;
    RMat in_y = tw.map([](const RatFun& f) { return f.invert_variable(); });
    return alg::saturate(clear_column_denominators(in_y));
}

}  // namespace

SubBundle subbundle_from_span(const P1Bundle& b, const RMat& w) {
    const u32 p = b.p;
    SubBundle sb;
    RMat basis = alg::column_basis(w);
    if (basis.cols() == 0) {
        sb.chart0 = sb.chart1 = RMat(b.rank(), 0, RatFun(p));
        sb.transition = RMat(0, 0, RatFun(p));
        return sb;
    }
    sb.chart0 = alg::to_ratfun(alg::saturate(clear_column_denominators(basis)));
    sb.chart1 = from_chart1_poly(chart1_saturation(b, sb.chart0));
    sb.transition = alg::coordinates(sb.chart1, RMat(b.transition * sb.chart0));
    RatFun d = alg::det(sb.transition);
    if (!d.is_laurent() || !is_monomial(d.num()))
        throw ContractViolation("subbundle transition determinant " + d.to_string() + " is not a monomial");
    sb.degree = d.den().degree() - d.num().degree();
    return sb;
}

std::vector<HNStep> hn_filtration_plain(const P1Bundle& b) {
    Splitting s = birkhoff_split(b);
    std::vector<HNStep> out;
    for (std::size_t k = 0; k < s.type.size(); ++k) {
        if (k + 1 < s.type.size() && s.type[k + 1] == s.type[k]) continue;
        std::vector<std::size_t> idx(k + 1);
        std::iota(idx.begin(), idx.end(), 0);
        HNStep step;
        step.sub = subbundle_from_span(b, s.chart0_change.columns(idx));
        step.type.assign(s.type.begin(), s.type.begin() + k + 1);
        out.push_back(std::move(step));
    }
    return out;
}

int max_subsheaf_degree(const std::vector<int>& type, std::size_t s) {
    std::vector<int> t = type;
    std::sort(t.rbegin(), t.rend());
    return std::accumulate(t.begin(), t.begin() + std::min(s, t.size()), 0);
}

int max_subsheaf_degree(const P1Bundle& b, std::size_t s) { return max_subsheaf_degree(birkhoff_split(b).type, s); }

AdaptedFrames adapted_frames(const P1Bundle& b, const std::vector<RMat>& nested_spans) {
    const u32 p = b.p;
    const std::size_t r = b.rank();
    PMat c0(r, 0, Poly(p)), c1(r, 0, Poly(p));
    AdaptedFrames out;
    out.offsets.push_back(0);
    for (const RMat& w : nested_spans) {
        RMat basis = alg::column_basis(w);
        if (basis.cols() == c0.cols()) continue;
        PMat s0 = alg::saturate(clear_column_denominators(basis));
        PMat s1 = chart1_saturation(b, alg::to_ratfun(s0));
        c0 = alg::extend_adapted(c0, s0);
        c1 = alg::extend_adapted(c1, s1);
        out.offsets.push_back(c0.cols());
    }
    if (c0.cols() < r) {
        c0 = alg::extend_adapted(c0, PMat::identity(r, Poly(p)));
        c1 = alg::extend_adapted(c1, PMat::identity(r, Poly(p)));
        out.offsets.push_back(r);
    }
    out.chart0 = alg::to_ratfun(c0);
    out.chart1 = from_chart1_poly(c1);
    out.transition = *alg::inverse_matrix(out.chart1) * b.transition * out.chart0;
    return out;
}

}  // namespace hdr::p1
