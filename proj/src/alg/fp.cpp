#include "hdr/alg/fp.hpp"

#include "hdr/errors.hpp"

namespace hdr::alg {

bool is_supported_prime(u32 p) noexcept {
    if (p < 3 || p > 97 || p % 2 == 0) return false;
    for (u32 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_supported_prime(u32 p) {
    if (!is_supported_prime(p))
        throw InputError("p = " + std::to_string(p) + " is not an odd prime in [3, 97]");
}

u32 pow_mod(u32 a, unsigned long long e, u32 p) noexcept {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

}  // namespace hdr::alg
