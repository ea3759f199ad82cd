#include "hdr/suites/suites.hpp"

#include <algorithm>

#include "hdr/alg/linalg.hpp"
#include "hdr/alg/random.hpp"
#include "hdr/cartier/cartier.hpp"
#include "hdr/chern/chern.hpp"
#include "hdr/errors.hpp"
#include "hdr/flow/flow.hpp"
#include "hdr/monodromy/monodromy.hpp"
#include "hdr/nearby/nearby.hpp"
#include "hdr/p1/bundle.hpp"

namespace hdr::suites {

using alg::ModMatrix;
using alg::Poly;
using alg::RatFun;
using alg::Rational;
using alg::Rng;
using alg::u32;
using p1::RMat;

namespace {

// independent stream per suite
Rng stream(const Context& ctx, std::uint64_t salt) { return Rng(ctx.seed * 0x9E3779B97F4A7C15ULL + salt); }

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string label(u32 p, int trial) { return "p=" + std::to_string(p) + " trial " + std::to_string(trial); }

void add_hig0(Context& ctx, const higgs::LogHiggsBundle& hb, const std::string& origin) {
    ctx.hig0.push_back(hb);
    ctx.hig0_origin.push_back(origin);
}

ModMatrix random_invertible(Rng& rng, std::size_t n, u32 p) {
    for (;;) {
        ModMatrix g = alg::random_mod_matrix(rng, n, n, p);
        if (alg::rank(g) == n) return g;
    }
}

// Product of Laurent elementary and monomial diagonal factors, rejected
// unless every exponent lies in [-3, 3].
RMat random_laurent_invertible(Rng& rng, std::size_t r, u32 p) {
    for (;;) {
        RMat t = RMat::identity(r, RatFun(p));
        for (std::size_t i = 0; i < r; ++i)
            t(i, i) = RatFun::laurent_monomial(p, alg::random_unit(rng, p), alg::random_int(rng, -2, 2));
        const int ops = r == 1 ? 0 : alg::random_int(rng, 1, 4);
        for (int k = 0; k < ops; ++k) {
            std::size_t i = rng() % r, j = rng() % r;
            if (i == j) continue;
            RatFun c = RatFun::laurent_monomial(p, alg::random_unit(rng, p), alg::random_int(rng, -2, 2));
            for (std::size_t col = 0; col < r; ++col) t(i, col) += c * t(j, col);
        }
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i)
            for (std::size_t j = 0; j < r && ok; ++j) {
                const RatFun& f = t(i, j);
                if (f.is_zero()) continue;
                int lo = f.num().valuation() - f.den().degree();
                int hi = f.num().degree() - f.den().degree();
                ok = lo >= -3 && hi <= 3;
            }
        if (ok) return t;
    }
}

}  // namespace

void SuiteReport::check(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 20) failures.push_back(what);
}

SuiteReport discriminant_suite(Context& ctx) {
    using namespace chern;
    SuiteReport rep{1, "discriminants", true, {}, {}};
    Rng rng = stream(ctx, 1);
    int agree = 0, all_true = 0, twists = 0, sums = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = alg::random_int(rng, 1, 6);
        RingPtr ring = make_ring({"h", "k", "d", "e"}, {1, 1, 2, 3}, n);
        const int rank = alg::random_int(rng, 1, 6);
        ChernData cd = random_chern_data(rng, ring, rank, t % 2 == 0);
        EquivalenceReport eq = check_equivalence_delta(cd);
        bool pairwise = eq.b1 == eq.b2 && eq.b2 == eq.b3;
        rep.check(pairwise, "equivalence conditions disagree at trial " + std::to_string(t));
        agree += pairwise;
        all_true += eq.b1 && eq.b2 && eq.b3;
        if (t % 2 == 0) rep.check(eq.b1, "log-free data fails the conditions at trial " + std::to_string(t));

        std::vector<GradedClass> d0 = higher_discriminants(cd);
        if (d0.size() >= 2) {
            GradedClass c1 = cd.chern(1), c2 = cd.chern(2);
            GradedClass closed = Rational(2 * rank) * c2 - Rational(rank - 1) * (c1 * c1);
            rep.check(d0[1] == closed, "Delta_2 closed form fails at trial " + std::to_string(t));
        }
        for (int k = 0; k < 20; ++k) {
            ChernData tw = twist(cd, random_class(rng, ring, 1));
            std::vector<GradedClass> d1 = higher_discriminants(tw);
            bool same = d0.size() == d1.size();
            for (std::size_t i = 1; same && i < d0.size(); ++i) same = d0[i] == d1[i];
            rep.check(same, "twist changes Delta_i at trial " + std::to_string(t));
            ++twists;
        }
        std::vector<ChernData> parts{cd, random_chern_data(rng, ring, alg::random_int(rng, 1, 3), false)};
        rep.check(direct_sum_discriminant_identity(parts).is_zero(), "direct sum residual nonzero at trial " + std::to_string(t));
        ++sums;
    }
    // symbolic Delta_2 on free Chern generators
    int symbolic = 0;
    for (int rank = 1; rank <= 6; ++rank) {
        RingPtr ring = make_ring({"c1", "c2", "c3", "c4", "c5", "c6"}, {1, 2, 3, 4, 5, 6}, 6);
        std::vector<GradedClass> c;
        for (int i = 1; i <= 6; ++i)
            c.push_back(i <= rank ? GradedClass::generator(ring, "c" + std::to_string(i)) : GradedClass(ring));
        ChernData cd = make_chern_data(ring, rank, c);
        GradedClass expect = parse_class(ring, std::to_string(2 * rank) + "*c2 - " + std::to_string(rank - 1) + "*c1^2");
        if (rank == 1) expect = parse_class(ring, "0");
        bool ok = higher_discriminants(cd)[1] == expect;
        rep.check(ok, "symbolic Delta_2 differs for rank " + std::to_string(rank));
        symbolic += ok;
    }
    rep.fact("random_data", 100);
    rep.fact("conditions_agree", agree);
    rep.fact("conditions_all_true", all_true);
    rep.fact("twists_checked", twists);
    rep.fact("direct_sums_checked", sums);
    rep.fact("symbolic_delta2_ranks", symbolic);
    return rep;
}

SuiteReport monodromy_suite(Context& ctx) {
    using namespace monodromy;
    SuiteReport rep{2, "monodromy", true, {}, {}};
    Rng rng = stream(ctx, 2);
    const u32 p = 3;
    int types = 0, unique = 0;
    for (int dim = 1; dim <= 4; ++dim) {
        for (const auto& blocks : partitions(dim)) {
            ++types;
            std::string tag = "dim " + std::to_string(dim) + " blocks " + join(blocks);
            ModMatrix n = jordan_nilpotent(blocks, p);
            ModMatrix g = random_invertible(rng, dim, p);
            ModMatrix gn = g * n * *alg::inverse_matrix(g);
            for (const ModMatrix* op : {&n, &gn}) {
                auto f = monodromy_filtration(*op);
                auto expected = jordan_filtration(blocks, p);
                if (op == &gn)
                    for (auto& s : expected.steps) s = g * s;
                rep.check(same_filtration(f, expected), "closed form differs, " + tag);
                rep.check(verify_filtration_axioms(*op, f).all(), "axioms fail, " + tag);
                rep.check(check_primitive_decomposition(*op, f).holds, "primitive decomposition fails, " + tag);
                rep.check(graded_of_kernel(*op, f).matches_primitive, "Gr(ker N) rank identity fails, " + tag);
            }
            if (dim <= 3) {
                auto u = exhaustive_uniqueness(n, monodromy_filtration(n));
                rep.check(u.unique_and_equal, "uniqueness fails, " + tag);
                unique += u.unique_and_equal;
            }
        }
    }
    rep.fact("jordan_types", types);
    rep.fact("uniqueness_confirmed", unique);
    return rep;
}

SuiteReport birkhoff_suite(Context& ctx) {
    SuiteReport rep{3, "birkhoff", true, {}, {}};
    Rng rng = stream(ctx, 3);
    std::vector<int> by_rank(4, 0);
    for (int t = 0; t < 200; ++t) {
        const u32 p = t % 2 ? 3 : 5;
        const std::size_t r = 1 + rng() % 3;
        ++by_rank[r];
        RMat tr = random_laurent_invertible(rng, r, p);
        p1::P1Bundle b = p1::make_bundle(p, tr);
        p1::Splitting s = p1::birkhoff_split(b);
        std::string tag = label(p, t);
        rep.check(s.chart1_change * tr * s.chart0_change == p1::diagonal_transition(p, s.type), "U T V not diagonal, " + tag);
        int sum = 0;
        for (int a : s.type) sum += a;
        rep.check(p1::degree_and_slope(b).degree == sum, "degree differs from sum of type, " + tag);
        rep.check(p1::h0_brute_force(b, 0) == p1::h0_dimension(s.type, 0), "h0 differs from type, " + tag);
        for (int k = 0; k < 2; ++k) {
            RMat u = alg::to_ratfun(alg::random_unimodular(rng, r, p, 1, 3));
            RMat v = p1::from_chart1_poly(alg::random_unimodular(rng, r, p, 1, 3));
            rep.check(p1::birkhoff_split(p1::make_bundle(p, v * tr * u)).type == s.type, "type moves under frame change, " + tag);
        }
    }
    rep.fact("matrices", 200);
    rep.fact("rank1", by_rank[1]);
    rep.fact("rank2", by_rank[2]);
    rep.fact("rank3", by_rank[3]);
    return rep;
}

SuiteReport cartier_suite(Context& ctx) {
    using namespace cartier;
    SuiteReport rep{4, "cartier", true, {}, {}};
    Rng rng = stream(ctx, 4);
    const u32 primes[] = {3, 5, 7};
    int pairs = 0, certified = 0;
    for (int t = 0; t < 50; ++t) {
        const u32 p = primes[t % 3];
        LogDivisor d = higgs::random_divisor(rng, p, 4);
        const std::size_t r = 1 + rng() % 3;
        std::vector<int> type;
        for (std::size_t i = 0; i < r; ++i) type.push_back(alg::random_int(rng, -2, 2));
        if (t % 4 == 0) type.assign(r, 0);
        LogHiggsBundle hb = higgs::random_nilpotent_higgs(rng, p, type, d, 2);
        std::string tag = label(p, t);

        CartierResult cr = inverse_cartier(hb);
        const LogConnection& v = cr.connection;
        rep.check(p1::det_exponent(v.bundle) == static_cast<int>(p) * p1::det_exponent(hb.bundle), "deg V != p deg E, " + tag);
        for (const auto& pt : d.points)
            rep.check(higgs::residue(v, pt) == higgs::residue(hb, pt), "residue changes at " + pt.to_string() + ", " + tag);
        PCurvature pc = p_curvature(v);
        rep.check(pc.level.has_value() && *pc.level <= p - 1, "p-curvature level out of range, " + tag);
        rep.check(pc.in_range, "p-curvature out of range, " + tag);
        rep.check(pc.psi0 == expected_p_curvature(hb), "p-curvature differs from F*theta, " + tag);
        if (t < 20) {
            FrobeniusLift l1 = random_lift(rng, p, d, 2), l2 = random_lift(rng, p, d, 2);
            LogConnection c1 = inverse_cartier(hb, l1).connection, c2 = inverse_cartier(hb, l2).connection;
            rep.check(intertwines(glue_change_of_lift(l1, l2, hb), c1, c2), "exp(tau) does not intertwine, " + tag);
            ++pairs;
        }
        if (p1::det_exponent(hb.bundle) == 0 && r <= 2) {
            bool ok = r == 1;
            if (r == 2) ok = higgs::is_semistable_rank2(hb, ctx.enum_guard).verdict == higgs::Verdict::semistable;
            if (ok) {
                add_hig0(ctx, hb, "cartier " + tag);
                ++certified;
            }
        }
    }
    rep.fact("inputs", 50);
    rep.fact("lift_pairs", pairs);
    rep.fact("hig0_members", certified);
    return rep;
}

SuiteReport functoriality_suite(Context& ctx) {
    using namespace cartier;
    SuiteReport rep{5, "functoriality", true, {}, {}};
    Rng rng = stream(ctx, 5);
    const u32 primes[] = {3, 5, 7};
    for (int t = 0; t < 20; ++t) {
        const u32 p = primes[t % 3];
        const int m = 2 + t % 2;
        LogDivisor d = higgs::make_divisor(p, {higgs::Point::finite(0), higgs::Point::inf()});
        const std::size_t r = 1 + rng() % 2;
        std::vector<int> type;
        for (std::size_t i = 0; i < r; ++i) type.push_back(alg::random_int(rng, -1, 1));
        LogHiggsBundle hb = higgs::random_nilpotent_higgs(rng, p, type, d, 2);
        FunctorialityReport f = check_functoriality(MonomialMap{m, 1}, hb);
        std::string tag = label(p, t) + " m=" + std::to_string(m);
        rep.check(f.equal, "f*C^-1 != C^-1 f*, " + tag + (f.discrepancies.empty() ? "" : ": " + f.discrepancies[0]));
    }
    rep.fact("inputs", 20);
    return rep;
}

SuiteReport nearby_suite(Context& ctx) {
    using namespace nearby;
    SuiteReport rep{6, "nearby", true, {}, {}};
    Rng rng = stream(ctx, 6);
    const u32 p = 5;
    int square = 0;
    for (int t = 0; t < 20; ++t) {
        Config c = t % 2 ? Config::x_only : Config::normal_crossing;
        const std::size_t r = 1 + rng() % 3;
        LocalLogHiggsModule m = random_local_module(rng, p, r, c);
        std::string tag = "trial " + std::to_string(t) + " config " + to_string(c);
        CompatibilityReport cr = z_model_compatibility(m);
        rep.check(cr.connections_equal, "Z-model connections differ, " + tag);
        rep.check(cr.residue_square, "residue square fails, " + tag);
        square += cr.residue_square;
        Upsilon0Result u = upsilon0(phi_restrict(m));
        rep.check(u.residues_vanish, "Upsilon0 residue nonzero, " + tag);
        rep.check(u.torsion_free, "Upsilon0 graded has torsion, " + tag);
        rep.check(u.rank_symmetric, "Upsilon0 ranks not symmetric, " + tag);
        rep.check(u.ranks_sum, "Upsilon0 ranks do not sum to r, " + tag);
    }
    rep.fact("modules", 20);
    rep.fact("residue_squares", square);
    return rep;
}

SuiteReport flow_suite(Context& ctx) {
    using namespace flow;
    SuiteReport rep{7, "flow", true, {}, {}};
    Rng rng = stream(ctx, 7);
    const u32 lambda = 2;
    for (u32 p : {3u, 5u}) {
        LogDivisor d = four_points(p, lambda);
        const int bound = splitting_bound(2, d);
        std::vector<std::pair<std::string, HodgeSystem>> inputs{{"uniformizing", uniformizing_system(p, lambda)},
                                                                {"trivial", trivial_system(p, 2, d)}};
        for (int k = 0; k < 3; ++k) inputs.emplace_back("random" + std::to_string(k), random_rank2_system(rng, p, d));
        for (const auto& [name, sys] : inputs) {
            std::string tag = "p=" + std::to_string(p) + " " + name;
            FlowState s0 = initial_state(sys, cartier::default_lift(p, d), ctx.enum_guard);
            FlowRun run;
            try {
                run = run_flow(s0, 10, ctx.iter_guard, ctx.enum_guard);
            } catch (const GuardExceeded& e) {
                rep.check(false, "flow undecided, " + tag + ": " + e.what());
                continue;
            }
            std::string orbit;
            for (std::size_t i = 0; i < run.states.size(); ++i) {
                const FlowState& st = run.states[i];
                std::string at = tag + " E_" + std::to_string(i);
                orbit += (i ? " " : "") + join(st.type);
                rep.check(st.system.higgs.rank() == 2, "rank changed, " + at);
                rep.check(st.degree == 0, "degree nonzero, " + at);
                bool certified = st.certificate && st.certificate->verdict == higgs::Verdict::semistable;
                rep.check(certified, "not certified semistable, " + at);
                rep.check(within_bound(st.type, bound), "splitting type outside bound, " + at);
                if (certified) add_hig0(ctx, st.system.higgs, "flow " + at);
            }
            for (std::size_t i = 0; i < run.steps.size(); ++i) {
                rep.check(run.steps[i].degree_scales, "degree scaling fails, " + tag + " step " + std::to_string(i));
                rep.check(run.steps[i].rank_constant, "rank changes, " + tag + " step " + std::to_string(i));
            }
            rep.fact(tag + " types", orbit);
            PeriodicityReport per = detect_periodicity(s0, 10, ctx.iter_guard, ctx.enum_guard);
            std::string verdict = to_string(per.verdict);
            if (per.verdict == PeriodVerdict::periodic)
                verdict += " period " + std::to_string(per.period) + " from E_" + std::to_string(per.start);
            rep.fact(tag + " period", verdict);
        }
        for (std::size_t r = 1; r <= std::min<std::size_t>(3, p); ++r) {
            FlowState s = initial_state(trivial_system(p, r, d), cartier::default_lift(p, d), ctx.enum_guard);
            PeriodicityReport per = detect_periodicity(s, 3, ctx.iter_guard, ctx.enum_guard);
            rep.check(per.verdict == PeriodVerdict::periodic && per.period == 1 && per.start == 0,
                      "(O^" + std::to_string(r) + ", 0) not of period 1 at p=" + std::to_string(p));
        }
    }
    rep.fact("bound", splitting_bound(2, four_points(3, lambda)));
    return rep;
}

SuiteReport semipositivity_suite(Context& ctx) {
    SuiteReport rep{8, "semipositivity", true, {}, {}};
    int checked = 0, kernels = 0;
    for (std::size_t i = 0; i < ctx.hig0.size(); ++i) {
        higgs::SemipositivityReport s = higgs::kernel_semipositivity_check(ctx.hig0[i], ctx.enum_guard);
        rep.check(s.passes, "positive-degree subsheaf of ker theta, " + ctx.hig0_origin[i]);
        ++checked;
        kernels += s.kernel_rank > 0;
    }
    rep.check(checked > 0, "no certified members were produced");
    rep.fact("members_checked", checked);
    rep.fact("nonzero_kernels", kernels);
    return rep;
}

const std::vector<SuiteEntry>& all_suites() {
    static const std::vector<SuiteEntry> suites{
        {1, "discriminants", discriminant_suite}, {2, "monodromy", monodromy_suite},
        {3, "birkhoff", birkhoff_suite},          {4, "cartier", cartier_suite},
        {5, "functoriality", functoriality_suite}, {6, "nearby", nearby_suite},
        {7, "flow", flow_suite},                  {8, "semipositivity", semipositivity_suite},
    };
    return suites;
}

std::vector<SuiteReport> run_all(Context& ctx) {
    std::vector<SuiteReport> out;
    for (const auto& s : all_suites()) {
        try {
            out.push_back(s.run(ctx));
        } catch (const std::exception& e) {
            SuiteReport rep{s.id, s.name, true, {}, {}};
            rep.check(false, std::string("aborted: ") + e.what());
            out.push_back(rep);
        }
    }
    return out;
}

}  // namespace hdr::suites
