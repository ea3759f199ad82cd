#pragma once

// Seeded generators shared by the test suites and `selftest`.

#include <cstdint>
#include <random>

#include "hdr/alg/matrix.hpp"

namespace hdr::alg {

using Rng = std::mt19937_64;

inline u32 random_residue(Rng& rng, u32 p) { return static_cast<u32>(rng() % p); }
inline u32 random_unit(Rng& rng, u32 p) { return 1 + static_cast<u32>(rng() % (p - 1)); }
inline int random_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Poly random_poly(Rng& rng, u32 p, int max_deg);
ModMatrix random_mod_matrix(Rng& rng, std::size_t r, std::size_t c, u32 p);
// Product of random elementary matrices over F_p[y] with entries of degree
// at most max_deg per step.
Matrix<Poly> random_unimodular(Rng& rng, std::size_t n, u32 p, int max_deg, int steps = 6);

}  // namespace hdr::alg
