#pragma once

// Linear algebra over a field. Works for ModMatrix (F_p), Matrix<RatFun>
// (F_p(x)) and Matrix<Rational>.

#include <optional>
#include <vector>

#include "hdr/alg/matrix.hpp"

namespace hdr::alg {

// Reduced row echelon form in place; returns the pivot columns.
template <class M>
std::vector<std::size_t> rref(M& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t best = a.rows();
        std::size_t best_cost = 0;
        for (std::size_t i = row; i < a.rows(); ++i) {
            auto v = a.get(i, col);
            if (is_zero(v)) continue;
            std::size_t c = pivot_cost(v);
            if (best == a.rows() || c < best_cost) {
                best = i;
                best_cost = c;
                if (c == 0) break;
            }
        }
        if (best == a.rows()) continue;
        a.swap_rows(row, best);
        a.row_scale(row, inverse(a.get(row, col)), col);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            auto f = a.get(i, col);
            if (!is_zero(f)) a.row_axpy(i, row, -f, col);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class M>
std::size_t rank(M a) {
    return rref(a).size();
}

// Columns form a basis of the right kernel.
template <class M>
M kernel(const M& a) {
    M r = a;
    auto piv = rref(r);
    std::size_t n = a.cols();
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    M k = a.make(n, n - piv.size());
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        k.set(f, out, a.one());
        for (std::size_t i = 0; i < piv.size(); ++i) k.set(piv[i], out, -r.get(i, f));
        ++out;
    }
    return k;
}

template <class M>
struct SolveResult {
    bool consistent = false;
    M particular;  // one solution X of A X = B
    M kernel;      // basis of solutions of A X = 0 (columns)
};

template <class M>
SolveResult<M> solve_linear(const M& a, const M& b) {
    SolveResult<M> out;
    out.kernel = kernel(a);
    M aug = a.make(a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    auto piv = rref(aug);
    for (auto c : piv)
        if (c >= a.cols()) return out;
    out.consistent = true;
    out.particular = a.make(a.cols(), b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.particular.set(piv[i], j, aug.get(i, a.cols() + j));
    return out;
}

template <class M>
std::optional<M> inverse_matrix(const M& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    std::size_t n = a.rows();
    M aug = a.make(n, 2 * n);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < n; ++i) aug.set(i, n + i, a.one());
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    return aug.block(0, n, n, n);
}

template <class M>
typename M::value_type det(M a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    auto d = a.one();
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!is_zero(a.get(i, col))) { piv = i; break; }
        if (piv == n) return a.zero();
        if (piv != col) {
            a.swap_rows(piv, col);
            d = -d;
        }
        auto pv = a.get(col, col);
        d = d * pv;
        auto ip = inverse(pv);
        for (std::size_t i = col + 1; i < n; ++i) {
            auto f = a.get(i, col);
            if (!is_zero(f)) a.row_axpy(i, col, -(f * ip), col);
        }
    }
    return d;
}

// Linearly independent subset of the columns, as a matrix.
template <class M>
M column_basis(const M& a) {
    M r = a;
    auto piv = rref(r);
    return a.columns(piv);
}

template <class M>
bool in_span(const M& basis, const M& v) {
    if (basis.cols() == 0) return v.is_zero_matrix();
    return rank(hstack(basis, v)) == rank(basis);
}

template <class M>
M sum_spaces(const M& a, const M& b) {
    return column_basis(hstack(a, b));
}

template <class M>
M intersect_spaces(const M& a, const M& b) {
    if (a.cols() == 0 || b.cols() == 0) return a.make(a.rows(), 0);
    M ab = column_basis(a);
    M bb = column_basis(b);
    M neg_b = bb.make(bb.rows(), bb.cols());
    for (std::size_t i = 0; i < bb.rows(); ++i)
        for (std::size_t j = 0; j < bb.cols(); ++j) neg_b.set(i, j, -bb.get(i, j));
    M k = kernel(hstack(ab, neg_b));
    M coeff = k.block(0, 0, ab.cols(), k.cols());
    return column_basis(ab * coeff);
}

// Extends the independent columns of `sub` to a basis of the ambient space
// by appending standard vectors.
template <class M>
M extend_to_basis(const M& sub) {
    std::size_t n = sub.rows();
    M cur = column_basis(sub);
    for (std::size_t i = 0; i < n && cur.cols() < n; ++i) {
        M e = sub.make(n, 1);
        e.set(i, 0, sub.one());
        M next = hstack(cur, e);
        if (rank(next) == next.cols()) cur = next;
    }
    return cur;
}

// Coordinates X with basis * X = vecs; basis must have independent columns
// and vecs must lie in its span.
template <class M>
M coordinates(const M& basis, const M& vecs) {
    auto s = solve_linear(basis, vecs);
    if (!s.consistent) throw std::domain_error("vectors outside the span of the basis");
    return s.particular;
}

template <class M>
bool is_nilpotent(const M& a, unsigned* level = nullptr) {
    std::size_t n = a.rows();
    M pw = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (pw.is_zero_matrix()) {
            if (level) *level = static_cast<unsigned>(k - 1);
            return true;
        }
        pw = pw * a;
    }
    if (pw.is_zero_matrix()) {
        if (level) *level = static_cast<unsigned>(n);
        return true;
    }
    return false;
}

}  // namespace hdr::alg
