#include "barrett.hpp"
#include "hdr/simd/mod_kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace hdr::simd {
namespace {

inline uint32x4_t reduce4(uint32x4_t v, uint32x4_t vp, uint32x4_t vm) {
    uint32x4_t q = vshrq_n_u32(vmulq_u32(v, vm), 16);
    uint32x4_t r = vmlsq_u32(v, q, vp);
    uint32x4_t ge = vcgeq_u32(r, vp);
    return vsubq_u32(r, vandq_u32(ge, vp));
}

inline uint32x4_t cond_sub4(uint32x4_t v, uint32x4_t vp) {
    return vsubq_u32(v, vandq_u32(vcgeq_u32(v, vp), vp));
}

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
               std::uint32_t p) {
    const std::uint32_t m = detail::barrett_factor(p);
    const uint32x4_t vp = vdupq_n_u32(p), vm = vdupq_n_u32(m), vs = vdupq_n_u32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t v = vmlaq_u32(vld1q_u32(dst + i), vld1q_u32(src + i), vs);
        vst1q_u32(dst + i, reduce4(v, vp, vm));
    }
    for (; i < n; ++i) dst[i] = detail::barrett_reduce(dst[i] + s * src[i], p, m);
}

void add_neon(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
    const uint32x4_t vp = vdupq_n_u32(p);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_u32(dst + i, cond_sub4(vaddq_u32(vld1q_u32(dst + i), vld1q_u32(src + i)), vp));
    for (; i < n; ++i) {
        std::uint32_t v = dst[i] + src[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void sub_neon(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
    const uint32x4_t vp = vdupq_n_u32(p);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t v = vsubq_u32(vaddq_u32(vld1q_u32(dst + i), vp), vld1q_u32(src + i));
        vst1q_u32(dst + i, cond_sub4(v, vp));
    }
    for (; i < n; ++i) {
        std::uint32_t v = dst[i] + p - src[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void scale_neon(std::uint32_t* dst, std::uint32_t s, std::size_t n, std::uint32_t p) {
    const std::uint32_t m = detail::barrett_factor(p);
    const uint32x4_t vp = vdupq_n_u32(p), vm = vdupq_n_u32(m), vs = vdupq_n_u32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_u32(dst + i, reduce4(vmulq_u32(vld1q_u32(dst + i), vs), vp, vm));
    for (; i < n; ++i) dst[i] = detail::barrett_reduce(s * dst[i], p, m);
}

constexpr ModKernels kNeon{Isa::neon, axpy_neon, add_neon, sub_neon, scale_neon};

}  // namespace

// NEON is part of the aarch64 baseline.
const ModKernels* neon_kernels() noexcept { return &kNeon; }

}  // namespace hdr::simd

#else

namespace hdr::simd {
const ModKernels* neon_kernels() noexcept { return nullptr; }
}  // namespace hdr::simd

#endif
