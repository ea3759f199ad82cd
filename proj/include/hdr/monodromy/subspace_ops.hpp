#pragma once

// The same filtration code runs over a field (F_p, subspaces) and over
// F_p[y] (saturated submodules); this selects the primitive operations.

#include "hdr/alg/linalg.hpp"
#include "hdr/alg/snf.hpp"

namespace hdr::monodromy {

template <class M>
struct SubspaceOps;

template <>
struct SubspaceOps<alg::ModMatrix> {
    using Mat = alg::ModMatrix;
    static Mat identity(std::size_t n, const Mat& like) { return Mat::identity(n, like.prime()); }
    static Mat kernel(const Mat& a) { return alg::kernel(a); }
    static Mat image(const Mat& a) { return alg::column_basis(a); }
    static Mat sum(const Mat& a, const Mat& b) { return alg::sum_spaces(a, b); }
    static Mat intersect(const Mat& a, const Mat& b) { return alg::intersect_spaces(a, b); }
    static Mat coordinates(const Mat& basis, const Mat& v) { return alg::coordinates(basis, v); }
    static Mat extend(const Mat& sub, const Mat& super) {
        if (sub.cols() == 0) return super;
        Mat x = coordinates(super, sub);
        return super * alg::extend_to_basis(x);
    }
    static std::size_t rank(const Mat& a) { return alg::rank(a); }
    // square block: invertible over the field
    static bool iso_integral(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }
    static bool iso_generic(const Mat& a) { return iso_integral(a); }
    static bool quotient_torsion_free(const Mat&, const Mat&) { return true; }
};

template <>
struct SubspaceOps<alg::Matrix<alg::Poly>> {
    using Mat = alg::Matrix<alg::Poly>;
    static Mat identity(std::size_t n, const Mat& like) { return Mat::identity(n, like.zero()); }
    static Mat kernel(const Mat& a) { return alg::module_kernel(a); }
    static Mat image(const Mat& a) { return alg::saturate(a); }
    static Mat sum(const Mat& a, const Mat& b) { return alg::module_sum(a, b); }
    static Mat intersect(const Mat& a, const Mat& b) { return alg::module_intersect(a, b); }
    static Mat coordinates(const Mat& basis, const Mat& v) { return alg::module_coordinates(basis, v); }
    static Mat extend(const Mat& sub, const Mat& super) { return alg::extend_adapted(sub, super); }
    static std::size_t rank(const Mat& a) { return alg::rank(alg::to_ratfun(a)); }
    // unit determinant: an isomorphism of free modules
    static bool iso_integral(const Mat& a) { return alg::is_unimodular(a); }
    // isomorphism after tensoring with F_p(y)
    static bool iso_generic(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }
    // sub is saturated inside super (coordinates have unit invariant factors)
    static bool quotient_torsion_free(const Mat& sub, const Mat& super) {
        if (sub.cols() == 0) return true;
        return alg::quotient_torsion_free(coordinates(super, sub));
    }
};

}  // namespace hdr::monodromy
