#include "hdr/monodromy/monodromy.hpp"

namespace hdr::monodromy {

using alg::ModMatrix;
using alg::u32;

ModMatrix jordan_nilpotent(const std::vector<int>& blocks, u32 p) {
    std::size_t n = 0;
    for (int b : blocks) n += b;
    ModMatrix m(n, n, p);
    std::size_t off = 0;
    for (int b : blocks) {
        for (int t = 1; t < b; ++t) m.at(off + t - 1, off + t) = 1;
        off += b;
    }
    return m;
}

WeightFiltration<ModMatrix> jordan_filtration(const std::vector<int>& blocks, u32 p) {
    std::size_t n = 0;
    int top = 0;
    for (int b : blocks) {
        n += b;
        top = std::max(top, b - 1);
    }
    WeightFiltration<ModMatrix> f;
    f.lo = -top;
    f.hi = top;
    for (int w = f.lo; w <= f.hi; ++w) {
        std::vector<std::size_t> cols;
        std::size_t off = 0;
        for (int b : blocks) {
            for (int t = 1; t <= b; ++t)
                if (2 * t - b - 1 <= w) cols.push_back(off + t - 1);
            off += b;
        }
        f.steps.push_back(ModMatrix::identity(n, p).columns(cols));
    }
    return f;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<ModMatrix> all_subspaces(std::size_t n, u32 p) {
    std::vector<ModMatrix> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) piv.push_back(j);
        // free entries of the reduced row echelon form
        std::vector<std::pair<std::size_t, std::size_t>> freepos;
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (!(mask & (1u << j))) freepos.push_back({i, j});
        std::size_t total = 1;
        for (std::size_t t = 0; t < freepos.size(); ++t) total *= p;
        for (std::size_t code = 0; code < total; ++code) {
            ModMatrix rows(piv.size(), n, p);
            for (std::size_t i = 0; i < piv.size(); ++i) rows.at(i, piv[i]) = 1;
            std::size_t c = code;
            for (auto [i, j] : freepos) {
                rows.at(i, j) = static_cast<u32>(c % p);
                c /= p;
            }
            out.push_back(rows.transpose());
        }
    }
    return out;
}

bool same_subspace(const ModMatrix& a, const ModMatrix& b) {
    std::size_t ra = alg::rank(a), rb = alg::rank(b);
    if (ra != rb) return false;
    if (ra == 0) return true;
    return alg::rank(hstack(a, b)) == ra;
}

namespace {

ModMatrix step_at(const WeightFiltration<ModMatrix>& f, int w, std::size_t n, u32 p) {
    if (w < f.lo) return ModMatrix(n, 0, p);
    if (w > f.hi) return ModMatrix::identity(n, p);
    return f.at(w);
}

}  // namespace

bool same_filtration(const WeightFiltration<ModMatrix>& a, const WeightFiltration<ModMatrix>& b) {
    if (a.steps.empty() || b.steps.empty()) return a.steps.empty() == b.steps.empty();
    std::size_t n = a.steps.back().rows();
    u32 p = a.steps.back().prime();
    for (int w = std::min(a.lo, b.lo) - 1; w <= std::max(a.hi, b.hi) + 1; ++w)
        if (!same_subspace(step_at(a, w, n, p), step_at(b, w, n, p))) return false;
    return true;
}

UniquenessReport exhaustive_uniqueness(const ModMatrix& n, const WeightFiltration<ModMatrix>& expected) {
    // Gr_i = 0 for |i| >= dim because N^i = 0 there and N^i must be an
    // isomorphism Gr_i -> Gr_-i, so the window [-(dim-1), dim-1] is complete.
    UniquenessReport rep;
    const std::size_t dim = n.rows();
    const u32 p = n.prime();
    if (dim == 0) return rep;
    auto subs = all_subspaces(dim, p);
    const std::size_t s = subs.size();
    std::vector<std::vector<bool>> contains(s, std::vector<bool>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            contains[i][j] = subs[i].cols() <= subs[j].cols() &&
                             (subs[i].cols() == 0 || alg::rank(hstack(subs[j], subs[i])) == subs[j].cols());
    const int top = static_cast<int>(dim) - 1;
    const std::size_t free_steps = 2 * top;  // weights -top .. top-1
    std::vector<std::size_t> chain;
    bool seen_expected = false;
    auto rec = [&](auto&& self, std::size_t prev) -> void {
        if (chain.size() == free_steps) {
            WeightFiltration<ModMatrix> f;
            f.lo = -top;
            f.hi = top;
            for (std::size_t idx : chain) f.steps.push_back(subs[idx]);
            f.steps.push_back(ModMatrix::identity(dim, p));
            ++rep.candidates;
            if (verify_filtration_axioms(n, f).all()) {
                ++rep.passing;
                if (same_filtration(f, expected)) seen_expected = true;
            }
            return;
        }
        for (std::size_t i = 0; i < s; ++i)
            if (prev == s || contains[prev][i]) {
                chain.push_back(i);
                self(self, i);
                chain.pop_back();
            }
    };
    rec(rec, s);
    rep.unique_and_equal = rep.passing == 1 && seen_expected;
    return rep;
}

}  // namespace hdr::monodromy
