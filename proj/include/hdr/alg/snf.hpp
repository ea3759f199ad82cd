#pragma once

// Modules over F_p[y]: Smith normal form, saturation, and the submodule
// operations used for filtrations by saturated submodules. Submodules are
// passed as matrices whose columns generate them.

#include "hdr/alg/matrix.hpp"

namespace hdr::alg {

struct SmithForm {
    Matrix<Poly> U, S, V;
    Matrix<Poly> U_inv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

// U * M * V = S with S diagonal, monic invariant factors d_1 | d_2 | ...
SmithForm smith_normal_form(const Matrix<Poly>& m);

Poly det_poly(const Matrix<Poly>& m);
bool is_unimodular(const Matrix<Poly>& m);

// Basis of the smallest submodule with torsion-free quotient containing
// the span of the columns.
Matrix<Poly> saturate(const Matrix<Poly>& gens);

// True when the quotient of the free module by the column span has no
// torsion, read off the Smith diagonal.
bool quotient_torsion_free(const Matrix<Poly>& gens);

// Saturated kernel basis.
Matrix<Poly> module_kernel(const Matrix<Poly>& a);
Matrix<Poly> module_image(const Matrix<Poly>& a);
Matrix<Poly> module_sum(const Matrix<Poly>& a, const Matrix<Poly>& b);
// Intersection of two saturated submodules.
Matrix<Poly> module_intersect(const Matrix<Poly>& a, const Matrix<Poly>& b);

// Given a basis `sub` of a saturated submodule of the module with basis
// `super`, returns a basis of `super` whose first columns are `sub`.
Matrix<Poly> extend_adapted(const Matrix<Poly>& sub, const Matrix<Poly>& super);

// Coordinates in a basis of a saturated submodule; entries are polynomial.
Matrix<Poly> module_coordinates(const Matrix<Poly>& basis, const Matrix<Poly>& vecs);

}  // namespace hdr::alg
