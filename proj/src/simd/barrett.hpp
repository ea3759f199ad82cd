#pragma once

#include <cstdint>

namespace hdr::simd::detail {

// floor(2^16 / p); with v < 2^16 the quotient estimate (v*m) >> 16 is at
// most one below floor(v / p).
inline std::uint32_t barrett_factor(std::uint32_t p) noexcept { return 65536u / p; }

inline std::uint32_t barrett_reduce(std::uint32_t v, std::uint32_t p, std::uint32_t m) noexcept {
    std::uint32_t q = (v * m) >> 16;
    std::uint32_t r = v - q * p;
    return r >= p ? r - p : r;
}

}  // namespace hdr::simd::detail
