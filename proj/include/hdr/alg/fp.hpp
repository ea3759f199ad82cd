#pragma once

#include <cstdint>
#include <string>

namespace hdr::alg {

using u32 = std::uint32_t;

bool is_supported_prime(u32 p) noexcept;
// Throws InputError unless p is an odd prime with 3 <= p <= 97.
void require_supported_prime(u32 p);

inline u32 reduce(long long v, u32 p) noexcept {
    long long r = v % static_cast<long long>(p);
    return static_cast<u32>(r < 0 ? r + p : r);
}

inline u32 mul_mod(u32 a, u32 b, u32 p) noexcept { return static_cast<u32>((std::uint64_t(a) * b) % p); }
inline u32 add_mod(u32 a, u32 b, u32 p) noexcept { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 sub_mod(u32 a, u32 b, u32 p) noexcept { return a >= b ? a - b : a + p - b; }
inline u32 neg_mod(u32 a, u32 p) noexcept { return a == 0 ? 0 : p - a; }

u32 pow_mod(u32 a, unsigned long long e, u32 p) noexcept;
// a must be nonzero mod p.
u32 inv_mod(u32 a, u32 p);

struct Fp {
    u32 v = 0;
    u32 p = 0;

    Fp() = default;
    Fp(long long value, u32 prime) : v(reduce(value, prime)), p(prime) {}

    bool is_zero() const noexcept { return v == 0; }
    Fp inverse() const { return Fp(inv_mod(v, p), p); }

    friend Fp operator+(Fp a, Fp b) { return Fp(add_mod(a.v, b.v, a.p), a.p); }
    friend Fp operator-(Fp a, Fp b) { return Fp(sub_mod(a.v, b.v, a.p), a.p); }
    friend Fp operator*(Fp a, Fp b) { return Fp(mul_mod(a.v, b.v, a.p), a.p); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(neg_mod(v, p), p); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }

    std::string to_string() const { return std::to_string(v); }
};

}  // namespace hdr::alg
