#include "hdr/flow/flow.hpp"

#include <algorithm>

#include "hdr/alg/linalg.hpp"
#include "hdr/errors.hpp"

namespace hdr::flow {

using alg::ModMatrix;
using alg::Poly;
using alg::RatFun;
using p1::P1Bundle;

namespace {

RMat nabla(const LogConnection& c, const RMat& w) { return higgs::log_derivative(w) + c.a0 * w; }

std::size_t rank_of(const RMat& w) { return w.cols() == 0 ? 0 : alg::rank(w); }

RMat span_of(const RMat& a, const RMat& b) { return alg::column_basis(alg::hstack(a, b)); }

// drops steps equal to the next one or to everything
std::vector<RMat> tidy(std::vector<RMat> spans, std::size_t r) {
    std::vector<RMat> out;
    for (std::size_t k = 0; k < spans.size(); ++k) {
        std::size_t d = rank_of(spans[k]);
        if (d == 0 || d >= r) continue;
        if (!out.empty() && rank_of(out.back()) == d) {
            out.back() = spans[k];
            continue;
        }
        out.push_back(spans[k]);
    }
    return out;
}

std::optional<std::size_t> first_violation(const LogConnection& c, const std::vector<RMat>& spans) {
    for (std::size_t k = 0; k + 1 < spans.size(); ++k) {
        if (rank_of(span_of(spans[k + 1], nabla(c, spans[k]))) > rank_of(spans[k + 1])) return k;
    }
    return std::nullopt;
}

bool block_hessenberg(const RMat& a, const std::vector<std::size_t>& offsets) {
    const std::size_t nb = offsets.size() - 1;
    for (std::size_t u = 0; u < nb; ++u)
        for (std::size_t v = 0; v + 1 < u; ++v)
            for (std::size_t i = offsets[u]; i < offsets[u + 1]; ++i)
                for (std::size_t j = offsets[v]; j < offsets[v + 1]; ++j)
                    if (!a(i, j).is_zero()) return false;
    return true;
}

// Birkhoff frames on each diagonal block of a block diagonal system
HodgeSystem split_blocks(const HodgeSystem& s) {
    const u32 p = s.higgs.p();
    const std::size_t r = s.higgs.rank();
    RMat u(r, r, RatFun(p)), v(r, r, RatFun(p));
    for (std::size_t b = 0; b < s.blocks(); ++b) {
        std::size_t o = s.offsets[b], n = s.offsets[b + 1] - o;
        p1::Splitting sp = p1::birkhoff_split(P1Bundle{p, s.higgs.bundle.transition.block(o, o, n, n)});
        u.set_block(o, o, sp.chart0_change);
        v.set_block(o, o, sp.chart1_change);
    }
    HodgeSystem out = s;
    out.higgs = higgs::change_frame(s.higgs, u, v);
    return out;
}

bool same_lift(const FrobeniusLift& a, const FrobeniusLift& b) { return a.chart0 == b.chart0 && a.chart1 == b.chart1; }

}  // namespace

std::string to_string(SimpsonStatus s) { return s == SimpsonStatus::resolved ? "resolved" : "unresolved"; }

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::isomorphic: return "isomorphic";
        case IsoVerdict::not_isomorphic: return "not isomorphic";
        default: return "undecided";
    }
}

std::string to_string(PeriodVerdict v) {
    switch (v) {
        case PeriodVerdict::periodic: return "periodic";
        case PeriodVerdict::no_period: return "no period";
        default: return "undecided";
    }
}

bool is_transversal(const LogConnection& c, const std::vector<RMat>& spans) { return !first_violation(c, spans); }

SimpsonResult simpson_filtration(const LogConnection& c, std::size_t iter_guard, std::size_t enum_guard) {
    const u32 p = c.p();
    const std::size_t r = c.rank();
    if (r > p) throw InputError("simpson filtration needs rank <= p, got rank " + std::to_string(r));
    SimpsonResult out;
    std::vector<RMat> spans;
    for (const auto& step : p1::hn_filtration_plain(c.bundle))
        if (step.sub.rank() < r) spans.push_back(step.sub.chart0);
    spans = tidy(spans, r);

    bool settled = false;
    for (out.iterations = 0; out.iterations < iter_guard; ++out.iterations) {
        auto k = first_violation(c, spans);
        if (!k) {
            settled = true;
            break;
        }
        spans[*k + 1] = span_of(spans[*k + 1], nabla(c, spans[*k]));
        for (std::size_t j = *k + 2; j < spans.size(); ++j) spans[j] = span_of(spans[j], spans[j - 1]);
        spans = tidy(spans, r);
    }
    for (const RMat& w : spans) out.filtration.push_back(p1::subbundle_from_span(c.bundle, w));
    if (!settled && first_violation(c, spans)) {
        out.note = "no transversal filtration after " + std::to_string(iter_guard) + " refinements";
        return out;
    }

    p1::AdaptedFrames fr = p1::adapted_frames(c.bundle, spans);
    out.adapted = higgs::change_frame(c, fr.chart0, alg::inverse_matrix(fr.chart1).value());
    out.transversal = block_hessenberg(out.adapted.a0, fr.offsets);
    if (!out.transversal) throw ContractViolation("adapted connection is not block Hessenberg");

    const std::size_t nb = fr.offsets.size() - 1;
    RMat tgr(r, r, RatFun(p)), thgr(r, r, RatFun(p));
    HodgeSystem gr;
    gr.offsets = fr.offsets;
    for (std::size_t b = 0; b < nb; ++b) {
        gr.hodge_index.push_back(static_cast<int>(nb - 1 - b));
        for (std::size_t i = fr.offsets[b]; i < fr.offsets[b + 1]; ++i) {
            for (std::size_t j = fr.offsets[b]; j < fr.offsets[b + 1]; ++j) tgr(i, j) = out.adapted.bundle.transition(i, j);
            if (b > 0)
                for (std::size_t j = fr.offsets[b - 1]; j < fr.offsets[b]; ++j) thgr(i, j) = out.adapted.a0(i, j);
        }
    }
    gr.higgs = higgs::make_log_higgs(P1Bundle{p, tgr}, c.divisor, thgr);
    out.graded = split_blocks(gr);
    if (!higgs::is_hodge_system(out.graded)) throw ContractViolation("graded object is not a Hodge system");

    if (r == 2) {
        out.certificate = higgs::is_semistable_rank2(out.graded.higgs, enum_guard);
        if (out.certificate->verdict == higgs::Verdict::unstable) out.note = "graded Higgs bundle is unstable";
    } else if (r > 2) {
        out.heuristic = higgs::invariant_flag_heuristic(out.graded.higgs);
        out.note = "rank above 2: semistability is heuristic";
    }
    out.status = SimpsonStatus::resolved;
    return out;
}

FlowState initial_state(const HodgeSystem& s, const FrobeniusLift& lift, std::size_t enum_guard) {
    const u32 p = s.higgs.p();
    if (s.higgs.rank() > p) throw InputError("flow needs rank <= p, got rank " + std::to_string(s.higgs.rank()));
    if (s.offsets.size() != s.blocks() + 1 || s.offsets.back() != s.higgs.rank() || !higgs::is_hodge_system(s))
        throw InputError("initial data is not a graded Higgs bundle");
    cartier::check_lift(p, lift, s.higgs.divisor);
    FlowState st;
    st.system = split_blocks(s);
    st.type = p1::birkhoff_split(st.system.higgs.bundle).type;
    st.degree = p1::degree_and_slope(st.system.higgs.bundle).degree;
    if (st.system.higgs.rank() == 2) st.certificate = higgs::is_semistable_rank2(st.system.higgs, enum_guard);
    st.lift = lift;
    return st;
}

FlowState initial_state(const LogHiggsBundle& hb, const FrobeniusLift& lift, std::size_t enum_guard) {
    if (!higgs::nilpotency_level(hb.theta0)) throw InputError("flow needs a nilpotent Higgs field");
    return initial_state(higgs::griffiths_grading(hb, enum_guard).system, lift, enum_guard);
}

FlowStep flow_step(const FlowState& state, const FrobeniusLift& lift, std::size_t iter_guard, std::size_t enum_guard) {
    if (!same_lift(state.lift, lift)) throw InputError("the Frobenius lift is fixed for the whole flow");
    const u32 p = state.system.higgs.p();
    FlowStep step;
    step.connection = cartier::inverse_cartier(state.system.higgs, lift).connection;
    step.connection_type = p1::birkhoff_split(step.connection.bundle).type;
    step.simpson = simpson_filtration(step.connection, iter_guard, enum_guard);
    if (step.simpson.status != SimpsonStatus::resolved) throw GuardExceeded(step.simpson.note);

    FlowState& nx = step.next;
    nx.index = state.index + 1;
    nx.system = step.simpson.graded;
    nx.type = p1::birkhoff_split(nx.system.higgs.bundle).type;
    nx.degree = p1::degree_and_slope(nx.system.higgs.bundle).degree;
    nx.certificate = step.simpson.certificate;
    nx.lift = lift;

    const int dv = p1::degree_and_slope(step.connection.bundle).degree;
    step.degree_scales = dv == static_cast<int>(p) * state.degree && nx.degree == dv;
    step.rank_constant = step.connection.rank() == state.system.higgs.rank() && nx.system.higgs.rank() == step.connection.rank();
    return step;
}

FlowRun run_flow(const FlowState& initial, std::size_t steps, std::size_t iter_guard, std::size_t enum_guard) {
    FlowRun run;
    run.states.push_back(initial);
    for (std::size_t i = 0; i < steps; ++i) {
        run.steps.push_back(flow_step(run.states.back(), initial.lift, iter_guard, enum_guard));
        run.states.push_back(run.steps.back().next);
    }
    return run;
}

IsoResult isomorphic(const LogHiggsBundle& a, const LogHiggsBundle& b, std::size_t enum_guard) {
    IsoResult res;
    res.verdict = IsoVerdict::not_isomorphic;
    const u32 p = a.p();
    const std::size_t r = a.rank();
    if (b.p() != p || b.rank() != r || !(a.divisor.points == b.divisor.points)) return res;
    p1::Splitting sa = p1::birkhoff_split(a.bundle), sb = p1::birkhoff_split(b.bundle);
    if (sa.type != sb.type) return res;
    LogHiggsBundle fa = higgs::change_frame(a, sa.chart0_change, sa.chart1_change);
    LogHiggsBundle fb = higgs::change_frame(b, sb.chart0_change, sb.chart1_change);
    const std::vector<int>& t = sa.type;

    // phi(i, j) is a polynomial of degree <= t_i - t_j
    struct Unknown {
        std::size_t i, j;
        int k;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (int k = 0; k <= t[i] - t[j]; ++k) unknowns.push_back({i, j, k});
    auto basis_matrix = [&](const Unknown& u) {
        RMat m(r, r, RatFun(p));
        m(u.i, u.j) = RatFun::laurent_monomial(p, 1, u.k);
        return m;
    };

    Poly den = Poly::constant(p, 1);
    for (const RMat* th : {&fa.theta0, &fb.theta0})
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const Poly& d = (*th)(i, j).den();
                den = den * (d / alg::gcd(den, d));
            }
    std::vector<std::vector<Poly>> images;
    int top = 0;
    for (const Unknown& u : unknowns) {
        RMat m = basis_matrix(u);
        RMat e = fb.theta0 * m - m * fa.theta0;
        std::vector<Poly> flat;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                RatFun f = RatFun(den) * e(i, j);
                if (!f.is_polynomial()) throw ContractViolation("intertwiner equation did not clear denominators");
                flat.push_back(f.num());
                top = std::max(top, f.num().degree());
            }
        images.push_back(std::move(flat));
    }
    const std::size_t rows_per = static_cast<std::size_t>(top + 1);
    ModMatrix sys(r * r * rows_per, unknowns.size(), p);
    for (std::size_t c = 0; c < unknowns.size(); ++c)
        for (std::size_t e = 0; e < r * r; ++e)
            for (std::size_t d = 0; d < rows_per; ++d) sys.at(e * rows_per + d, c) = images[c][e].coeff(static_cast<int>(d));
    ModMatrix ker = unknowns.empty() ? ModMatrix(0, 0, p) : alg::kernel(sys);
    res.hom_dimension = ker.cols();
    if (res.hom_dimension == 0) return res;

    std::vector<u32> digits(res.hom_dimension, 0);
    auto advance = [&]() {
        for (auto& d : digits) {
            if (++d < p) return true;
            d = 0;
        }
        return false;
    };
    while (advance()) {
        if (res.candidates_tested >= enum_guard) {
            res.verdict = IsoVerdict::undecided;
            return res;
        }
        ++res.candidates_tested;
        RMat phi(r, r, RatFun(p));
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
            u32 coef = 0;
            for (std::size_t d = 0; d < digits.size(); ++d)
                coef = alg::add_mod(coef, alg::mul_mod(digits[d], ker.at(c, d), p), p);
            if (coef) phi(unknowns[c].i, unknowns[c].j) += RatFun::laurent_monomial(p, coef, unknowns[c].k);
        }
        if (!alg::det(phi).is_zero()) {
            res.verdict = IsoVerdict::isomorphic;
            res.witness = phi;
            return res;
        }
    }
    return res;
}

PeriodicityReport detect_periodicity(const FlowState& initial, std::size_t max_iter, std::size_t iter_guard,
                                     std::size_t enum_guard) {
    PeriodicityReport rep;
    rep.orbit.push_back(initial);
    if (initial.degree != 0) {
        rep.verdict = PeriodVerdict::no_period;
        rep.reason = "degree diverges: deg E_i = p^i * " + std::to_string(initial.degree);
        return rep;
    }
    bool undecided = false;
    for (std::size_t i = 1; i <= max_iter; ++i) {
        try {
            rep.steps.push_back(flow_step(rep.orbit.back(), initial.lift, iter_guard, enum_guard));
        } catch (const GuardExceeded& e) {
            rep.verdict = PeriodVerdict::undecided;
            rep.reason = std::string("step ") + std::to_string(i) + ": " + e.what();
            return rep;
        }
        rep.orbit.push_back(rep.steps.back().next);
        for (std::size_t j = 0; j < i; ++j) {
            IsoResult iso = isomorphic(rep.orbit[j].system.higgs, rep.orbit[i].system.higgs, enum_guard);
            if (iso.verdict == IsoVerdict::isomorphic) {
                rep.verdict = PeriodVerdict::periodic;
                rep.start = j;
                rep.period = i - j;
                rep.reason = "E_" + std::to_string(i) + " is isomorphic to E_" + std::to_string(j);
                return rep;
            }
            if (iso.verdict == IsoVerdict::undecided) undecided = true;
        }
    }
    rep.verdict = undecided ? PeriodVerdict::undecided : PeriodVerdict::no_period;
    rep.reason = undecided ? "isomorphism search hit the enumeration guard"
                           : "no period <= " + std::to_string(max_iter);
    return rep;
}

int splitting_bound(std::size_t rank, const LogDivisor& d) {
    return static_cast<int>(rank - 1) * (static_cast<int>(d.size()) - 2);
}

bool within_bound(const std::vector<int>& type, int bound) {
    return std::all_of(type.begin(), type.end(), [&](int a) { return std::abs(a) <= bound; });
}

LogDivisor four_points(u32 p, u32 lambda) {
    using higgs::Point;
    if (lambda % p == 0 || lambda % p == 1) throw InputError("lambda must differ from 0 and 1 mod p");
    return higgs::make_divisor(p, {Point::finite(0), Point::finite(1), Point::finite(lambda % p), Point::inf()});
}

HodgeSystem uniformizing_system(u32 p, u32 lambda) {
    LogDivisor d = four_points(p, lambda);
    RMat theta(2, 2, RatFun(p));
    Poly den = (Poly::x(p) - Poly::constant(p, 1)) * (Poly::x(p) - Poly::constant(p, lambda));
    theta(1, 0) = RatFun(Poly::constant(p, 1), den);
    HodgeSystem s;
    s.higgs = higgs::make_log_higgs(P1Bundle{p, p1::diagonal_transition(p, {1, -1})}, d, theta);
    s.offsets = {0, 1, 2};
    s.hodge_index = {1, 0};
    return s;
}

HodgeSystem trivial_system(u32 p, std::size_t rank, const LogDivisor& d) {
    HodgeSystem s;
    s.higgs = higgs::make_log_higgs(P1Bundle{p, p1::diagonal_transition(p, std::vector<int>(rank, 0))}, d,
                                    RMat(rank, rank, RatFun(p)));
    s.offsets = {0, rank};
    s.hodge_index = {0};
    return s;
}

HodgeSystem random_rank2_system(alg::Rng& rng, u32 p, const LogDivisor& d) {
    HodgeSystem s;
    do {
        s.higgs = higgs::random_nilpotent_higgs(rng, p, {0, 0}, d, 0);
    } while (s.higgs.theta0.is_zero_matrix());
    s.offsets = {0, 1, 2};
    s.hodge_index = {1, 0};
    return s;
}

}  // namespace hdr::flow
