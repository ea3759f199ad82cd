#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hdr/simd/mod_kernels.hpp"

using namespace hdr::simd;

namespace {

std::vector<const ModKernels*> variants() {
    std::vector<const ModKernels*> v;
    if (auto* k = avx2_kernels()) v.push_back(k);
    if (auto* k = neon_kernels()) v.push_back(k);
    return v;
}

std::vector<std::uint32_t> residues(std::mt19937& rng, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = rng() % p;
    return v;
}

}  // namespace

TEST(ModKernels, ScalarReferenceMatchesPlainArithmetic) {
    std::mt19937 rng(7);
    for (std::uint32_t p : {3u, 5u, 7u, 97u, 251u}) {
        auto a = residues(rng, 37, p), b = residues(rng, 37, p);
        std::uint32_t s = rng() % p;
        auto out = a;
        scalar_kernels().axpy(out.data(), b.data(), s, out.size(), p);
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(out[i], (a[i] + s * b[i]) % p);
        out = a;
        scalar_kernels().sub(out.data(), b.data(), out.size(), p);
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(out[i], (a[i] + p - b[i]) % p);
    }
}

TEST(ModKernels, VectorVariantsAgreeWithScalar) {
    std::mt19937 rng(11);
    const auto& ref = scalar_kernels();
    for (const ModKernels* k : variants()) {
        for (std::uint32_t p : {3u, 5u, 7u, 13u, 97u, 251u}) {
            for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1000u}) {
                auto a = residues(rng, n, p), b = residues(rng, n, p);
                std::uint32_t s = rng() % p;
                auto x = a, y = a;
                ref.axpy(x.data(), b.data(), s, n, p);
                k->axpy(y.data(), b.data(), s, n, p);
                EXPECT_EQ(x, y) << isa_name(k->isa) << " axpy p=" << p << " n=" << n;
                x = a, y = a;
                ref.add(x.data(), b.data(), n, p);
                k->add(y.data(), b.data(), n, p);
                EXPECT_EQ(x, y);
                x = a, y = a;
                ref.sub(x.data(), b.data(), n, p);
                k->sub(y.data(), b.data(), n, p);
                EXPECT_EQ(x, y);
                x = a, y = a;
                ref.scale(x.data(), s, n, p);
                k->scale(y.data(), s, n, p);
                EXPECT_EQ(x, y);
            }
        }
    }
}

TEST(ModKernels, ExtremeResiduesReduceFully) {
    for (std::uint32_t p : {3u, 97u, 251u}) {
        std::vector<std::uint32_t> a(40, p - 1), b(40, p - 1);
        for (const ModKernels* k : variants()) {
            auto y = a;
            k->axpy(y.data(), b.data(), p - 1, y.size(), p);
            for (auto v : y) EXPECT_EQ(v, ((p - 1) + (p - 1) * (p - 1)) % p);
        }
    }
}

TEST(ModKernels, ActiveIsOneOfTheVariants) {
    Isa isa = active().isa;
    EXPECT_TRUE(isa == Isa::scalar || (avx2_kernels() && isa == Isa::avx2) ||
                (neon_kernels() && isa == Isa::neon));
}
