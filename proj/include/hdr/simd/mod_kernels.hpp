#pragma once

// Vectorised inner loops for arithmetic on F_p coefficient arrays.
//
// All kernels take residues already reduced to [0, p) and require p < 256,
// so every intermediate a + s*b stays below 2^16 and a single Barrett step
// with a 16-bit shift reduces it.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hdr::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct ModKernels {
    Isa isa;
    // dst[i] = dst[i] + s * src[i]  (mod p)
    void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
                 std::uint32_t p);
    // dst[i] = dst[i] + src[i]  (mod p)
    void (*add)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p);
    // dst[i] = dst[i] - src[i]  (mod p)
    void (*sub)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p);
    // dst[i] = s * dst[i]  (mod p)
    void (*scale)(std::uint32_t* dst, std::uint32_t s, std::size_t n, std::uint32_t p);
};

constexpr std::uint32_t kMaxKernelPrime = 255;

const ModKernels& scalar_kernels() noexcept;

// nullptr when the variant was not compiled in or the running CPU lacks it.
const ModKernels* avx2_kernels() noexcept;
const ModKernels* neon_kernels() noexcept;

// Best variant for this CPU, chosen once. HDR_SIMD=scalar forces the
// reference kernels.
const ModKernels& active() noexcept;

}  // namespace hdr::simd
