#pragma once

#include <gmpxx.h>

#include <string>

namespace hdr::alg {

using Rational = mpq_class;

// a/b in lowest terms (mpq_class(a, b) alone does not canonicalize)
inline Rational frac(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }
inline Rational one_like(const Rational&) { return Rational(1); }
inline std::size_t pivot_cost(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hdr::alg
