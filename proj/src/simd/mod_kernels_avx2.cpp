// Compiled with -mavx2; only reached after a runtime CPU check.

#include "barrett.hpp"
#include "hdr/simd/mod_kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace hdr::simd {
namespace {

inline __m256i reduce8(__m256i v, __m256i vp, __m256i vm, __m256i vpm1) {
    __m256i q = _mm256_srli_epi32(_mm256_mullo_epi32(v, vm), 16);
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, vp));
    __m256i ge = _mm256_cmpgt_epi32(r, vpm1);
    return _mm256_sub_epi32(r, _mm256_and_si256(ge, vp));
}

inline __m256i cond_sub8(__m256i v, __m256i vp, __m256i vpm1) {
    __m256i ge = _mm256_cmpgt_epi32(v, vpm1);
    return _mm256_sub_epi32(v, _mm256_and_si256(ge, vp));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
               std::uint32_t p) {
    const std::uint32_t m = detail::barrett_factor(p);
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i v = _mm256_add_epi32(a, _mm256_mullo_epi32(b, vs));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(v, vp, vm, vpm1));
    }
    for (; i < n; ++i) dst[i] = detail::barrett_reduce(dst[i] + s * src[i], p, m);
}

void add_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            cond_sub8(_mm256_add_epi32(a, b), vp, vpm1));
    }
    for (; i < n; ++i) {
        std::uint32_t v = dst[i] + src[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void sub_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i v = _mm256_sub_epi32(_mm256_add_epi32(a, vp), b);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), cond_sub8(v, vp, vpm1));
    }
    for (; i < n; ++i) {
        std::uint32_t v = dst[i] + p - src[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void scale_avx2(std::uint32_t* dst, std::uint32_t s, std::size_t n, std::uint32_t p) {
    const std::uint32_t m = detail::barrett_factor(p);
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            reduce8(_mm256_mullo_epi32(a, vs), vp, vm, vpm1));
    }
    for (; i < n; ++i) dst[i] = detail::barrett_reduce(s * dst[i], p, m);
}

constexpr ModKernels kAvx2{Isa::avx2, axpy_avx2, add_avx2, sub_avx2, scale_avx2};

}  // namespace

const ModKernels* avx2_kernels() noexcept {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

}  // namespace hdr::simd

#else

namespace hdr::simd {
const ModKernels* avx2_kernels() noexcept { return nullptr; }
}  // namespace hdr::simd

#endif
