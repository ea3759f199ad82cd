#pragma once

// Deligne's monodromy filtration of a nilpotent N, over F_p (ModMatrix)
// or over F_p[y] with saturated steps (Matrix<Poly>).

#include <map>
#include <string>
#include <vector>

#include "hdr/errors.hpp"
#include "hdr/monodromy/subspace_ops.hpp"

namespace hdr::monodromy {

// least e with N^e = 0; throws InputError naming N^n when N is not nilpotent
template <class M>
unsigned nilpotency_index(const M& n) {
    const std::size_t r = n.rows();
    M pw = SubspaceOps<M>::identity(r, n);
    for (std::size_t e = 0; e <= r; ++e) {
        if (pw.is_zero_matrix()) return static_cast<unsigned>(e);
        pw = pw * n;
    }
    throw InputError("operator is not nilpotent: N^" + std::to_string(r) + " != 0");
}

template <class M>
struct WeightFiltration {
    int lo = 0;  // M_{lo-1} = 0
    int hi = 0;  // M_hi = everything
    std::vector<M> steps;  // steps[w - lo] spans M_w

    const M& at(int w) const { return steps[w - lo]; }
    std::size_t dim(int w) const {
        if (w < lo) return 0;
        if (w > hi) return steps.back().cols();
        return steps[w - lo].cols();
    }
    std::size_t gr_rank(int w) const { return dim(w) - dim(w - 1); }
};

// M_k = sum_{j >= max(0,-k)} ker N^{k+j+1} cap im N^j
template <class M>
WeightFiltration<M> monodromy_filtration(const M& n) {
    using Ops = SubspaceOps<M>;
    const unsigned e = nilpotency_index(n);
    const std::size_t r = n.rows();
    WeightFiltration<M> f;
    const int top = e == 0 ? 0 : static_cast<int>(e) - 1;
    f.lo = -top;
    f.hi = top;
    std::vector<M> powers{Ops::identity(r, n)};
    for (unsigned i = 1; i <= 2 * e + 1; ++i) powers.push_back(powers.back() * n);
    auto pw = [&](int i) -> const M& { return powers[std::min<std::size_t>(i, powers.size() - 1)]; };
    for (int k = f.lo; k <= f.hi; ++k) {
        M acc = n.make(r, 0);
        for (int j = std::max(0, -k); j <= static_cast<int>(e); ++j) {
            M term = Ops::intersect(Ops::kernel(pw(k + j + 1)), Ops::image(pw(j)));
            acc = Ops::sum(acc, term);
        }
        f.steps.push_back(acc);
    }
    return f;
}

// Basis adapted to the filtration, with N written in it.
template <class M>
struct AdaptedFrame {
    M basis;                 // columns ordered by increasing weight
    M n_adapted;             // basis^{-1} N basis
    std::map<int, std::pair<std::size_t, std::size_t>> range;  // weight -> (offset, rank of Gr)

    // block of a matrix in adapted coordinates: rows of weight `to`, columns of weight `from`
    M block(const M& a, int to, int from) const {
        auto [ro, rn] = range.at(to);
        auto [co, cn] = range.at(from);
        return a.block(ro, co, rn, cn);
    }
    bool has(int w) const { return range.count(w) != 0; }
    std::size_t rank(int w) const { return has(w) ? range.at(w).second : 0; }
};

template <class M>
AdaptedFrame<M> adapted_frame(const M& n, const WeightFiltration<M>& f) {
    using Ops = SubspaceOps<M>;
    AdaptedFrame<M> a;
    M cur = n.make(n.rows(), 0);
    for (int w = f.lo; w <= f.hi; ++w) {
        std::size_t before = cur.cols();
        cur = Ops::extend(cur, f.at(w));
        a.range[w] = {before, cur.cols() - before};
    }
    if (cur.cols() != n.rows()) throw ContractViolation("filtration is not exhaustive");
    a.basis = cur;
    a.n_adapted = Ops::coordinates(cur, n * cur);
    return a;
}

struct AxiomReport {
    bool shifts_by_two = true;        // N M_k in M_{k-2}
    bool iso_generic = true;          // N^i: Gr_i -> Gr_-i invertible (over the fraction field)
    bool iso_integral = true;         // ... and an isomorphism of the graded modules themselves
    bool graded_torsion_free = true;  // each M_{k-1} saturated in M_k
    std::vector<int> failing_weights;
    bool all() const { return shifts_by_two && iso_generic && iso_integral && graded_torsion_free; }
};

template <class M>
AxiomReport verify_filtration_axioms(const M& n, const WeightFiltration<M>& f) {
    using Ops = SubspaceOps<M>;
    AxiomReport rep;
    const std::size_t r = n.rows();
    auto step = [&](int w) -> M {
        if (w < f.lo) return n.make(r, 0);
        if (w > f.hi) return f.steps.back();
        return f.at(w);
    };
    for (int k = f.lo; k <= f.hi; ++k) {
        M lower = step(k - 2);
        M img = n * step(k);
        bool inside = img.is_zero_matrix() || (lower.cols() > 0 && Ops::rank(hstack(lower, img)) == lower.cols());
        if (!inside) {
            rep.shifts_by_two = false;
            rep.failing_weights.push_back(k);
        }
        if (k > f.lo && !Ops::quotient_torsion_free(step(k - 1), step(k))) rep.graded_torsion_free = false;
    }
    if (!rep.shifts_by_two || step(f.hi).cols() != r) {
        rep.iso_generic = rep.iso_integral = false;
        return rep;
    }
    AdaptedFrame<M> a = adapted_frame(n, f);
    M pw = Ops::identity(r, n);
    const int top = std::max(f.hi, -f.lo);
    for (int i = 0; i <= top; ++i) {
        std::size_t ri = a.rank(i), rmi = a.rank(-i);
        bool gen = ri == rmi, integ = gen;
        if (gen && ri > 0) {
            M blk = a.block(pw, -i, i);
            gen = Ops::iso_generic(blk);
            integ = gen && Ops::iso_integral(blk);
        }
        if (!gen) rep.iso_generic = false;
        if (!integ) rep.iso_integral = false;
        if (!gen || !integ) rep.failing_weights.push_back(i);
        pw = pw * a.n_adapted;
    }
    return rep;
}

template <class M>
struct PrimitiveParts {
    std::map<int, M> in_graded;  // P_j as columns in Gr_j coordinates
    std::map<int, M> lifted;     // the same vectors lifted to the ambient module
    std::size_t rank(int j) const { return in_graded.count(j) ? in_graded.at(j).cols() : 0; }
};

// P_j = ker(N^{j+1}: Gr_j -> Gr_{-j-2}), j >= 0
template <class M>
PrimitiveParts<M> primitive_parts(const M& n, const WeightFiltration<M>& f) {
    using Ops = SubspaceOps<M>;
    AdaptedFrame<M> a = adapted_frame(n, f);
    PrimitiveParts<M> out;
    for (int j = 0; j <= f.hi; ++j) {
        if (a.rank(j) == 0) continue;
        M pw = alg::power(a.n_adapted, static_cast<unsigned>(j + 1));
        M k = a.rank(-j - 2) ? Ops::kernel(a.block(pw, -j - 2, j)) : Ops::identity(a.rank(j), n);
        if (k.cols() == 0) continue;
        out.in_graded[j] = k;
        out.lifted[j] = a.basis.block(0, a.range.at(j).first, n.rows(), a.rank(j)) * k;
    }
    return out;
}

struct PrimDecoReport {
    bool holds = true;
    std::map<int, std::size_t> gr_rank;
    std::map<int, std::size_t> decomposed_rank;  // sum of ranks of N^i P_{j+2i}
};

// Gr_j = (+)_{i >= max(0,-j)} N^i P_{j+2i}, checked with explicit bases
template <class M>
PrimDecoReport check_primitive_decomposition(const M& n, const WeightFiltration<M>& f) {
    using Ops = SubspaceOps<M>;
    AdaptedFrame<M> a = adapted_frame(n, f);
    PrimitiveParts<M> parts = primitive_parts(n, f);
    PrimDecoReport rep;
    for (int j = f.lo; j <= f.hi; ++j) {
        std::size_t gr = a.rank(j);
        rep.gr_rank[j] = gr;
        M span = n.make(gr, 0);
        for (int i = std::max(0, -j); j + 2 * i <= f.hi; ++i) {
            if (!parts.in_graded.count(j + 2 * i)) continue;
            M pw = alg::power(a.n_adapted, static_cast<unsigned>(i));
            M img = a.block(pw, j, j + 2 * i) * parts.in_graded.at(j + 2 * i);
            span = hstack(span, img);
        }
        rep.decomposed_rank[j] = span.cols();
        if (span.cols() != gr) {
            rep.holds = false;
        } else if (gr > 0 && !Ops::iso_integral(span)) {
            rep.holds = false;
        }
    }
    return rep;
}

struct KernelGradedReport {
    std::map<int, std::size_t> kernel_weight_rank;  // rank of Gr_w of ker N with the induced filtration
    bool matches_primitive = true;                  // rank Gr_{-j}(ker N) = rank P_j
};

template <class M>
KernelGradedReport graded_of_kernel(const M& n, const WeightFiltration<M>& f) {
    using Ops = SubspaceOps<M>;
    KernelGradedReport rep;
    M k = Ops::kernel(n);
    PrimitiveParts<M> parts = primitive_parts(n, f);
    std::size_t prev = 0;
    for (int w = f.lo; w <= f.hi; ++w) {
        std::size_t d = Ops::intersect(k, f.at(w)).cols();
        if (d != prev) rep.kernel_weight_rank[w] = d - prev;
        prev = d;
    }
    for (int j = 0; j <= f.hi; ++j) {
        std::size_t kr = rep.kernel_weight_rank.count(-j) ? rep.kernel_weight_rank.at(-j) : 0;
        if (kr != parts.rank(j)) rep.matches_primitive = false;
    }
    for (const auto& [w, r] : rep.kernel_weight_rank)
        if (w > 0 && r) rep.matches_primitive = false;
    return rep;
}

// ---- field-case helpers (monodromy.cpp) ----

// Nilpotent matrix in Jordan form with the given block sizes; block b's
// basis vectors v_1..v_m satisfy N v_{t+1} = v_t, N v_1 = 0.
alg::ModMatrix jordan_nilpotent(const std::vector<int>& blocks, alg::u32 p);

// Closed form for a Jordan basis: v_t of a size-m block sits in weight 2t - m - 1.
WeightFiltration<alg::ModMatrix> jordan_filtration(const std::vector<int>& blocks, alg::u32 p);

// All partitions of n in non-increasing order.
std::vector<std::vector<int>> partitions(int n);

// Every subspace of F_p^n, each as a basis in reduced form.
std::vector<alg::ModMatrix> all_subspaces(std::size_t n, alg::u32 p);

// Counts filtrations with support in [-(n-1), n-1] passing the axioms and
// reports whether the unique one is `expected`.
struct UniquenessReport {
    std::size_t candidates = 0;
    std::size_t passing = 0;
    bool unique_and_equal = false;
};
UniquenessReport exhaustive_uniqueness(const alg::ModMatrix& n, const WeightFiltration<alg::ModMatrix>& expected);

bool same_subspace(const alg::ModMatrix& a, const alg::ModMatrix& b);
bool same_filtration(const WeightFiltration<alg::ModMatrix>& a, const WeightFiltration<alg::ModMatrix>& b);

}  // namespace hdr::monodromy
