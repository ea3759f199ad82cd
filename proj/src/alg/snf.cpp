#include "hdr/alg/snf.hpp"

#include <stdexcept>

#include "hdr/alg/linalg.hpp"

namespace hdr::alg {

namespace {

struct Pos {
    std::size_t i, j;
    bool found;
};

Pos min_degree_entry(const Matrix<Poly>& s, std::size_t t) {
    Pos best{0, 0, false};
    int bd = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Poly& v = s(i, j);
            if (v.is_zero()) continue;
            if (!best.found || v.degree() < bd) {
                best = {i, j, true};
                bd = v.degree();
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const Matrix<Poly>& m) {
    const u32 p = m.zero().prime();
    const std::size_t n = m.rows(), k = m.cols();
    SmithForm f;
    f.S = m;
    f.U = Matrix<Poly>::identity(n, Poly(p));
    f.U_inv = f.U;
    f.V = Matrix<Poly>::identity(k, Poly(p));
    auto& S = f.S;

    auto swap_r = [&](std::size_t a, std::size_t b) {
        S.swap_rows(a, b);
        f.U.swap_rows(a, b);
        f.U_inv.swap_cols(a, b);
    };
    auto swap_c = [&](std::size_t a, std::size_t b) {
        S.swap_cols(a, b);
        f.V.swap_cols(a, b);
    };
    // row dst -= q * row src
    auto sub_row = [&](std::size_t dst, std::size_t src, const Poly& q) {
        S.row_axpy(dst, src, -q);
        f.U.row_axpy(dst, src, -q);
        f.U_inv.col_axpy(src, dst, q);
    };
    auto sub_col = [&](std::size_t dst, std::size_t src, const Poly& q) {
        S.col_axpy(dst, src, -q);
        f.V.col_axpy(dst, src, -q);
    };

    std::size_t t = 0;
    for (; t < std::min(n, k); ++t) {
        Pos pos = min_degree_entry(S, t);
        if (!pos.found) break;
        swap_r(t, pos.i);
        swap_c(t, pos.j);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (S(i, t).is_zero()) continue;
                auto [q, r] = S(i, t).divmod(S(t, t));
                sub_row(i, t, q);
                if (!r.is_zero()) {
                    swap_r(i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (S(t, j).is_zero()) continue;
                auto [q, r] = S(t, j).divmod(S(t, t));
                sub_col(j, t, q);
                if (!r.is_zero()) {
                    swap_c(j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i)
                for (std::size_t j = t + 1; j < k; ++j)
                    if (!S(t, t).divides(S(i, j))) {
                        // row t += row i, then the next pass lowers the pivot degree
                        S.row_axpy(t, i, Poly::constant(p, 1));
                        f.U.row_axpy(t, i, Poly::constant(p, 1));
                        f.U_inv.col_axpy(i, t, Poly::constant(p, p - 1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        u32 lc = S(t, t).lead();
        if (lc != 1) {
            Poly c = Poly::constant(p, inv_mod(lc, p));
            S.row_scale(t, c);
            f.U.row_scale(t, c);
            f.U_inv.col_scale(t, Poly::constant(p, lc));
        }
    }
    f.rank = t;
    return f;
}

Poly det_poly(const Matrix<Poly>& m) {
    RatFun d = det(to_ratfun(m));
    if (!d.is_polynomial()) throw std::logic_error("polynomial determinant with a denominator");
    return d.num();
}

bool is_unimodular(const Matrix<Poly>& m) {
    if (m.rows() != m.cols()) return false;
    Poly d = det_poly(m);
    return !d.is_zero() && d.degree() == 0;
}

Matrix<Poly> saturate(const Matrix<Poly>& gens) {
    SmithForm f = smith_normal_form(gens);
    std::vector<std::size_t> idx(f.rank);
    for (std::size_t i = 0; i < f.rank; ++i) idx[i] = i;
    return f.U_inv.columns(idx);
}

bool quotient_torsion_free(const Matrix<Poly>& gens) {
    SmithForm f = smith_normal_form(gens);
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i).degree() != 0) return false;
    return true;
}

Matrix<Poly> module_kernel(const Matrix<Poly>& a) {
    SmithForm f = smith_normal_form(a);
    std::vector<std::size_t> idx;
    for (std::size_t j = f.rank; j < a.cols(); ++j) idx.push_back(j);
    return f.V.columns(idx);
}

Matrix<Poly> module_image(const Matrix<Poly>& a) { return saturate(a); }

Matrix<Poly> module_sum(const Matrix<Poly>& a, const Matrix<Poly>& b) { return saturate(hstack(a, b)); }

Matrix<Poly> module_intersect(const Matrix<Poly>& a, const Matrix<Poly>& b) {
    if (a.cols() == 0 || b.cols() == 0) return a.make(a.rows(), 0);
    Matrix<Poly> k = module_kernel(hstack(a, -b));
    return saturate(a * k.block(0, 0, a.cols(), k.cols()));
}

Matrix<Poly> module_coordinates(const Matrix<Poly>& basis, const Matrix<Poly>& vecs) {
    return to_poly(coordinates(to_ratfun(basis), to_ratfun(vecs)));
}

Matrix<Poly> extend_adapted(const Matrix<Poly>& sub, const Matrix<Poly>& super) {
    if (sub.cols() == 0) return super;
    Matrix<Poly> x = module_coordinates(super, sub);
    SmithForm f = smith_normal_form(x);
    if (f.rank != sub.cols()) throw std::domain_error("sub-basis is not independent");
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i).degree() != 0) throw std::domain_error("submodule is not saturated");
    Matrix<Poly> b = super * f.U_inv;
    std::vector<std::size_t> idx;
    for (std::size_t j = sub.cols(); j < super.cols(); ++j) idx.push_back(j);
    return hstack(sub, b.columns(idx));
}

}  // namespace hdr::alg
