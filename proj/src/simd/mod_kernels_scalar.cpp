#include "barrett.hpp"
#include "hdr/simd/mod_kernels.hpp"

namespace hdr::simd {
namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
                 std::uint32_t p) {
    const std::uint32_t m = detail::barrett_factor(p);
    for (std::size_t i = 0; i < n; ++i) dst[i] = detail::barrett_reduce(dst[i] + s * src[i], p, m);
}

void add_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = dst[i] + src[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void sub_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = dst[i] + p - src[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void scale_scalar(std::uint32_t* dst, std::uint32_t s, std::size_t n, std::uint32_t p) {
    const std::uint32_t m = detail::barrett_factor(p);
    for (std::size_t i = 0; i < n; ++i) dst[i] = detail::barrett_reduce(s * dst[i], p, m);
}

constexpr ModKernels kScalar{Isa::scalar, axpy_scalar, add_scalar, sub_scalar, scale_scalar};

}  // namespace

const ModKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace hdr::simd
