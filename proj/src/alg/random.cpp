#include "hdr/alg/random.hpp"

namespace hdr::alg {

Poly random_poly(Rng& rng, u32 p, int max_deg) {
    std::vector<u32> c(max_deg + 1);
    for (auto& v : c) v = random_residue(rng, p);
    return Poly(p, std::move(c));
}

ModMatrix random_mod_matrix(Rng& rng, std::size_t r, std::size_t c, u32 p) {
    ModMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_residue(rng, p);
    return m;
}

Matrix<Poly> random_unimodular(Rng& rng, std::size_t n, u32 p, int max_deg, int steps) {
    Matrix<Poly> m = Matrix<Poly>::identity(n, Poly(p));
    if (n == 0) return m;
    for (int s = 0; s < steps; ++s) {
        std::size_t i = rng() % n, j = rng() % n;
        if (n > 1 && i == j) j = (i + 1) % n;
        if (i == j) {
            m.row_scale(i, Poly::constant(p, random_unit(rng, p)));
            continue;
        }
        m.row_axpy(i, j, random_poly(rng, p, max_deg));
        if (rng() % 3 == 0) m.row_scale(j, Poly::constant(p, random_unit(rng, p)));
    }
    return m;
}

}  // namespace hdr::alg
