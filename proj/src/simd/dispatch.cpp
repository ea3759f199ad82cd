#include <cstdlib>
#include <string_view>

#include "hdr/simd/mod_kernels.hpp"

namespace hdr::simd {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

namespace {

const ModKernels& select() noexcept {
    if (const char* env = std::getenv("HDR_SIMD"); env && std::string_view(env) == "scalar")
        return scalar_kernels();
    if (const ModKernels* k = avx2_kernels()) return *k;
    if (const ModKernels* k = neon_kernels()) return *k;
    return scalar_kernels();
}

}  // namespace

const ModKernels& active() noexcept {
    static const ModKernels& chosen = select();
    return chosen;
}

}  // namespace hdr::simd
