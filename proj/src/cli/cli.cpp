#include "hdr/cli/cli.hpp"

#include <functional>
#include <map>
#include <type_traits>

#include "hdr/alg/linalg.hpp"
#include "hdr/alg/parse.hpp"
#include "hdr/cartier/cartier.hpp"
#include "hdr/chern/chern.hpp"
#include "hdr/errors.hpp"
#include "hdr/flow/flow.hpp"
#include "hdr/monodromy/monodromy.hpp"
#include "hdr/nearby/nearby.hpp"
#include "hdr/suites/suites.hpp"

namespace hdr::cli {

using alg::ModMatrix;
using alg::Poly;
using alg::RatFun;
using alg::u32;
using higgs::LogDivisor;
using higgs::LogHiggsBundle;
using p1::PMat;
using p1::RMat;

namespace {

// ---- reading ----

std::string entry_text(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError(where + ": expected a string or an integer");
}

const Json& field(const Json& j, const std::string& key) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError("missing field '" + key + "'");
    return *it;
}

template <class T, class F>
alg::Matrix<T> read_matrix(const Json& j, const std::string& name, T zero, F parse) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(name + ": expected a nonempty array of rows");
    const std::size_t rows = j.size(), cols = j[0].size();
    alg::Matrix<T> m(rows, cols, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError(name + "[" + std::to_string(i) + "]: ragged row");
        for (std::size_t k = 0; k < cols; ++k) {
            std::string where = name + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            try {
                m(i, k) = parse(entry_text(j[i][k], where));
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
        }
    }
    return m;
}

RMat read_rmat(const Json& j, const std::string& name, u32 p) {
    return read_matrix(j, name, RatFun(p), [p](const std::string& s) { return alg::parse_ratfun(s, p); });
}

u32 read_prime(const Json& j, const RunConfig& cfg) {
    std::optional<std::uint64_t> from_input;
    if (j.is_object() && j.contains("p")) {
        if (!j["p"].is_number_unsigned()) throw InputError("p must be a positive integer");
        from_input = j["p"].get<std::uint64_t>();
    }
    if (from_input && cfg.p && *from_input != *cfg.p)
        throw InputError("--p " + std::to_string(*cfg.p) + " disagrees with p = " + std::to_string(*from_input) + " in the input");
    std::uint64_t p = from_input ? *from_input : cfg.p ? *cfg.p : 0;
    if (!p) throw InputError("no prime given (field 'p' or --p)");
    if (!supported_prime(p)) throw InputError("p = " + std::to_string(p) + " is not an odd prime below 65536");
    return static_cast<u32>(p);
}

LogDivisor read_divisor(const Json& j, u32 p) {
    const Json& d = field(j, "divisor");
    if (!d.is_array()) throw InputError("divisor: expected an array of points");
    std::vector<higgs::Point> pts;
    for (std::size_t i = 0; i < d.size(); ++i) pts.push_back(higgs::parse_point(entry_text(d[i], "divisor[" + std::to_string(i) + "]"), p));
    return higgs::make_divisor(p, pts);
}

void check_rank(const Json& j, std::size_t r) {
    if (j.contains("rank") && (!j["rank"].is_number_unsigned() || j["rank"].get<std::size_t>() != r))
        throw InputError("rank field does not match the matrix size " + std::to_string(r));
}

LogHiggsBundle read_higgs(const Json& j, u32 p) {
    RMat t = read_rmat(field(j, "transition"), "transition", p);
    check_rank(j, t.rows());
    p1::P1Bundle b = p1::make_bundle(p, t);
    LogDivisor d = read_divisor(j, p);
    RMat th0 = read_rmat(field(j, "theta0"), "theta0", p);
    if (j.contains("theta1")) return higgs::make_log_higgs(b, d, th0, read_rmat(j["theta1"], "theta1", p));
    return higgs::make_log_higgs(b, d, th0);
}

std::optional<cartier::FrobeniusLift> read_lift(const Json& j, u32 p, const LogDivisor& d) {
    if (!j.contains("lifts")) return std::nullopt;
    const Json& l = j["lifts"];
    cartier::FrobeniusLift lift{alg::parse_poly(entry_text(field(l, "chart0"), "lifts.chart0"), p, "x"),
                                alg::parse_poly(entry_text(field(l, "chart1"), "lifts.chart1"), p, "y")};
    try {
        cartier::check_lift(p, lift, d);
    } catch (const ContractViolation& e) {
        throw InputError(std::string("lifts: ") + e.what());
    }
    return lift;
}

// ---- writing ----

Json write(const RMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        out.push_back(row);
    }
    return out;
}

Json write(const PMat& m, const std::string& var) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string(var));
        out.push_back(row);
    }
    return out;
}

Json write(const ModMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k));
        out.push_back(row);
    }
    return out;
}

Json write(const LogDivisor& d) {
    Json out = Json::array();
    for (const auto& pt : d.points) {
        if (pt.at_infinity)
            out.push_back("inf");
        else
            out.push_back(pt.value);
    }
    return out;
}

Json level_json(const std::optional<unsigned>& l) { return l ? Json(*l) : Json(nullptr); }

Json residues_json(const LogHiggsBundle& hb) {
    Json out = Json::array();
    for (const auto& pt : hb.divisor.points) {
        ModMatrix r = higgs::residue(hb, pt);
        out.push_back(Json{{"point", pt.to_string()}, {"matrix", write(r)}, {"nilpotency_level", level_json(higgs::nilpotency_level(r))}});
    }
    return out;
}

Json sub_json(const p1::SubBundle& s) {
    return Json{{"rank", s.rank()}, {"degree", s.degree}, {"chart0", write(s.chart0)}};
}

Json semistability_json(const higgs::SemistabilityResult& s) {
    Json out{{"verdict", higgs::to_string(s.verdict)}, {"candidates_tested", s.candidates_tested}};
    if (s.witness) out["witness"] = sub_json(*s.witness);
    if (!s.note.empty()) out["note"] = s.note;
    return out;
}

// ---- commands ----

RunResult cmd_discriminants(const Json& j, const RunConfig&) {
    using namespace chern;
    const Json& gens = field(j, "generators");
    std::vector<std::string> names;
    std::vector<int> degrees;
    if (gens.is_array()) {
        for (const auto& g : gens) {
            if (g.is_object()) {
                names.push_back(field(g, "name").get<std::string>());
                degrees.push_back(field(g, "degree").get<int>());
            } else if (g.is_array() && g.size() == 2) {
                names.push_back(g[0].get<std::string>());
                degrees.push_back(g[1].get<int>());
            } else {
                throw InputError("generators: expected {name, degree} entries");
            }
        }
    } else if (gens.is_object()) {
        for (auto it = gens.begin(); it != gens.end(); ++it) {
            names.push_back(it.key());
            degrees.push_back(it.value().get<int>());
        }
    } else {
        throw InputError("generators: expected an array or an object");
    }
    const int trunc = field(j, "truncation").get<int>();
    RingPtr ring = make_ring(names, degrees, trunc);
    const Json& cls = field(j, "classes");
    if (!cls.is_array()) throw InputError("classes: expected an array of strings");
    std::vector<GradedClass> c;
    for (std::size_t i = 0; i < cls.size(); ++i) c.push_back(parse_class(ring, entry_text(cls[i], "classes[" + std::to_string(i) + "]")));
    ChernData cd = make_chern_data(ring, field(j, "rank").get<int>(), c);

    Json deltas = Json::array();
    for (const auto& d : higher_discriminants(cd)) deltas.push_back(d.to_string());
    EquivalenceReport eq = check_equivalence_delta(cd);
    bool agree = eq.b1 == eq.b2 && eq.b2 == eq.b3;
    Json rep{{"rank", cd.rank},
             {"truncation", trunc},
             {"discriminants", deltas},
             {"chern_character", chern_character(cd).to_string()},
             {"equivalence", Json{{"binomial_classes", eq.b1}, {"higher_discriminants_vanish", eq.b2}, {"log_chern_linear", eq.b3}, {"agree", agree}}}};
    return {rep, agree ? ok : contract_violation};
}

template <class M>
Json filtration_json(const M& n, Json& rep, bool& axioms_ok) {
    using namespace monodromy;
    auto f = monodromy_filtration(n);
    Json weights = Json::array();
    for (int w = f.lo; w <= f.hi; ++w)
        if (f.gr_rank(w)) weights.push_back(Json{{"weight", w}, {"rank", f.gr_rank(w)}});
    rep["weights"] = weights;
    AxiomReport ax = verify_filtration_axioms(n, f);
    PrimitiveParts<M> prim = primitive_parts(n, f);
    Json pr = Json::array();
    for (int jj = 0; jj <= f.hi; ++jj)
        if (prim.rank(jj)) pr.push_back(Json{{"j", jj}, {"rank", prim.rank(jj)}});
    rep["primitive_ranks"] = pr;
    rep["axioms"] = Json{{"shifts_by_two", ax.shifts_by_two},
                         {"iso_generic", ax.iso_generic},
                         {"iso_integral", ax.iso_integral},
                         {"graded_torsion_free", ax.graded_torsion_free}};
    bool deco = check_primitive_decomposition(n, f).holds;
    bool kern = graded_of_kernel(n, f).matches_primitive;
    rep["primitive_decomposition"] = deco;
    rep["kernel_graded_matches"] = kern;
    // over F_p[y] the integral isomorphism and the exact splitting hold only for strict N
    const bool module_case = std::is_same_v<M, PMat>;
    if (module_case) rep["strict"] = ax.iso_integral && deco;
    axioms_ok = ax.shifts_by_two && ax.iso_generic && ax.graded_torsion_free && kern && (module_case || (ax.iso_integral && deco));
    return rep;
}

RunResult cmd_monodromy(const Json& j, const RunConfig& cfg) {
    const u32 p = read_prime(j, cfg);
    const Json& mj = field(j, "matrix");
    bool over_y = false;
    if (mj.is_array())
        for (const auto& row : mj)
            if (row.is_array())
                for (const auto& e : row) over_y = over_y || (e.is_string() && e.get<std::string>().find('y') != std::string::npos);
    Json rep{{"p", p}, {"ring", over_y ? "F_p[y]" : "F_p"}};
    bool good = false;
    if (over_y) {
        PMat n = read_matrix(mj, "matrix", Poly(p), [p](const std::string& s) { return alg::parse_poly(s, p, "y"); });
        if (n.rows() != n.cols()) throw InputError("matrix must be square");
        rep["nilpotency_index"] = monodromy::nilpotency_index(n);
        filtration_json(n, rep, good);
    } else {
        RMat m = read_rmat(mj, "matrix", p);
        if (m.rows() != m.cols()) throw InputError("matrix must be square");
        ModMatrix n = alg::evaluate(m, 0);
        if (!(n.to_ratfun() == m)) throw InputError("matrix entries must be constants, or polynomials in y");
        rep["nilpotency_index"] = monodromy::nilpotency_index(n);
        filtration_json(n, rep, good);
    }
    return {rep, good ? ok : contract_violation};
}

RunResult cmd_split(const Json& j, const RunConfig& cfg) {
    const u32 p = read_prime(j, cfg);
    RMat t = read_rmat(field(j, "transition"), "transition", p);
    p1::P1Bundle b = p1::make_bundle(p, t);
    p1::Splitting s = p1::birkhoff_split(b);
    p1::DegreeSlope ds = p1::degree_and_slope(b);
    RMat diag = p1::diagonal_transition(p, s.type);
    bool diagonal = s.chart1_change * t * s.chart0_change == diag;
    Json rep{{"p", p},
             {"type", s.type},
             {"degree", ds.degree},
             {"slope", ds.slope.get_str()},
             {"transition", write(diag)},
             {"chart0_change", write(s.chart0_change)},
             {"chart1_change", write(s.chart1_change)},
             {"diagonal_check", diagonal}};
    return {rep, diagonal ? ok : contract_violation};
}

RunResult cmd_residues(const Json& j, const RunConfig& cfg) {
    LogHiggsBundle hb = read_higgs(j, read_prime(j, cfg));
    higgs::TraceReport tr = higgs::residue_trace_sum(hb);
    Json rep{{"p", hb.p()},
             {"rank", hb.rank()},
             {"divisor", write(hb.divisor)},
             {"residues", residues_json(hb)},
             {"trace_sum", Json{{"sum", tr.sum}, {"expected", tr.expected}, {"holds", tr.holds}}}};
    return {rep, tr.holds ? ok : contract_violation};
}

RunResult cmd_semistable(const Json& j, const RunConfig& cfg) {
    LogHiggsBundle hb = read_higgs(j, read_prime(j, cfg));
    p1::DegreeSlope ds = p1::degree_and_slope(hb.bundle);
    Json rep{{"p", hb.p()},
             {"rank", hb.rank()},
             {"type", p1::birkhoff_split(hb.bundle).type},
             {"degree", ds.degree},
             {"slope", ds.slope.get_str()}};
    int code = ok;
    if (hb.rank() == 1) {
        rep["verdict"] = "semistable";
        rep["method"] = "rank one";
    } else if (hb.rank() == 2) {
        higgs::SemistabilityResult s = higgs::is_semistable_rank2(hb, cfg.guard_enum);
        rep["method"] = "exact rank-2 enumeration";
        Json sj = semistability_json(s);
        for (auto& [k, v] : sj.items()) rep[k] = v;
        if (s.verdict == higgs::Verdict::undecided) code = undecided;
    } else {
        higgs::HeuristicReport h = higgs::invariant_flag_heuristic(hb);
        rep["method"] = "invariant flag heuristic";
        Json cands = Json::array();
        bool destab = false;
        for (const auto& c : h.candidates) {
            cands.push_back(Json{{"label", c.label}, {"rank", c.sub.rank()}, {"degree", c.sub.degree}, {"destabilizing", c.destabilizing}});
            destab = destab || c.destabilizing;
        }
        rep["candidates"] = cands;
        rep["verdict"] = destab ? "unstable" : "undecided";
        if (!destab) code = undecided;
    }
    return {rep, code};
}

RunResult cmd_cartier(const Json& j, const RunConfig& cfg) {
    using namespace cartier;
    const u32 p = read_prime(j, cfg);
    LogHiggsBundle hb = read_higgs(j, p);
    FrobeniusLift lift = read_lift(j, p, hb.divisor).value_or(default_lift(p, hb.divisor));
    CartierResult cr = inverse_cartier(hb, lift);
    const LogConnection& v = cr.connection;
    bool residues_ok = true;
    Json res = Json::array();
    for (const auto& pt : hb.divisor.points) {
        ModMatrix rv = higgs::residue(v, pt);
        bool same = rv == higgs::residue(hb, pt);
        residues_ok = residues_ok && same;
        res.push_back(Json{{"point", pt.to_string()}, {"matrix", write(rv)}, {"preserved", same}});
    }
    PCurvature pc = p_curvature(v);
    bool psi_ok = pc.psi0 == expected_p_curvature(hb);
    const int de = p1::degree_and_slope(hb.bundle).degree, dv = p1::degree_and_slope(v.bundle).degree;
    bool deg_ok = dv == static_cast<int>(p) * de;
    Json rep{{"p", p},
             {"rank", v.rank()},
             {"divisor", write(v.divisor)},
             {"transition", write(v.bundle.transition)},
             {"a0", write(v.a0)},
             {"a1", write(v.a1)},
             {"lifts", Json{{"chart0", lift.chart0.to_string("x")}, {"chart1", lift.chart1.to_string("y")}}},
             {"type", p1::birkhoff_split(v.bundle).type},
             {"degrees", Json{{"E", de}, {"V", dv}, {"scales_by_p", deg_ok}}},
             {"residues", res},
             {"p_curvature", Json{{"psi0", write(pc.psi0)},
                                  {"level", level_json(pc.level)},
                                  {"in_range", pc.in_range},
                                  {"equals_frobenius_theta", psi_ok}}}};
    bool all = residues_ok && psi_ok && deg_ok && pc.in_range;
    return {rep, all ? ok : contract_violation};
}

Json state_json(const flow::FlowState& s) {
    Json out{{"index", s.index}, {"type", s.type}, {"degree", s.degree}, {"hodge_index", s.system.hodge_index}};
    out["theta0"] = write(s.system.higgs.theta0);
    out["residues"] = residues_json(s.system.higgs);
    if (s.certificate) out["certificate"] = semistability_json(*s.certificate);
    return out;
}

RunResult cmd_flow(const Json& j, const RunConfig& cfg) {
    using namespace flow;
    const u32 p = read_prime(j, cfg);
    LogHiggsBundle hb = read_higgs(j, p);
    FrobeniusLift lift = read_lift(j, p, hb.divisor).value_or(cartier::default_lift(p, hb.divisor));
    std::size_t max_iter = cfg.max_iter;
    if (j.contains("max_iter")) max_iter = j["max_iter"].get<std::size_t>();
    FlowState s0 = initial_state(hb, lift, cfg.guard_enum);
    PeriodicityReport per = detect_periodicity(s0, max_iter, cfg.guard_iter, cfg.guard_enum);

    bool contracts = true;
    bool track_ss = s0.degree == 0 && hb.rank() == 2 && s0.certificate && s0.certificate->verdict == higgs::Verdict::semistable;
    Json steps = Json::array();
    for (const FlowStep& st : per.steps) {
        Json e{{"index", st.next.index - 1},
               {"connection_type", st.connection_type},
               {"filtration_degrees", Json::array()},
               {"degree_scales", st.degree_scales},
               {"rank_constant", st.rank_constant},
               {"next", state_json(st.next)}};
        for (const auto& f : st.simpson.filtration) e["filtration_degrees"].push_back(f.degree);
        contracts = contracts && st.degree_scales && st.rank_constant;
        if (track_ss) contracts = contracts && st.next.certificate && st.next.certificate->verdict == higgs::Verdict::semistable;
        steps.push_back(e);
    }
    Json period{{"verdict", to_string(per.verdict)}, {"reason", per.reason}};
    if (per.verdict == PeriodVerdict::periodic) {
        period["period"] = per.period;
        period["start"] = per.start;
    }
    Json orbit = Json::array();
    for (const auto& st : per.orbit) orbit.push_back(st.type);
    Json rep{{"p", p},
             {"rank", hb.rank()},
             {"divisor", write(hb.divisor)},
             {"max_iter", max_iter},
             {"bound", splitting_bound(hb.rank(), hb.divisor)},
             {"initial", state_json(s0)},
             {"steps", steps},
             {"orbit_types", orbit},
             {"period", period}};
    int code = !contracts ? contract_violation : per.verdict == PeriodVerdict::undecided ? undecided : ok;
    return {rep, code};
}

RunResult cmd_nearby(const Json& j, const RunConfig& cfg) {
    using namespace nearby;
    const u32 p = read_prime(j, cfg);
    Config c = parse_config(field(j, "config").get<std::string>());
    auto parse = [p](const std::string& s) { return alg::parse_bipoly(s, p); };
    BMat tx = read_matrix(field(j, "theta_x"), "theta_x", alg::BiPoly(p), parse);
    BMat ty = read_matrix(field(j, "theta_y"), "theta_y", alg::BiPoly(p), parse);
    check_rank(j, tx.rows());
    LocalLogHiggsModule m = make_local_higgs(p, c, tx, ty);
    LY0Module r = phi_restrict(m);
    Upsilon0Result u = upsilon0(r);
    CompatibilityReport cr = z_model_compatibility(m);
    Json pieces = Json::array();
    for (const auto& g : u.pieces)
        pieces.push_back(Json{{"weight", g.weight}, {"rank", g.rank}, {"torsion_free", g.torsion_free}, {"theta", write(g.theta, "y")}});
    Json rep{{"p", p},
             {"config", to_string(c)},
             {"rank", tx.rows()},
             {"joint_nilpotency_level", level_json(joint_nilpotency_level(tx, ty))},
             {"restriction", Json{{"residue", write(r.r, "y")}, {"theta", write(r.theta, "y")}}},
             {"upsilon0", Json{{"pieces", pieces},
                               {"residues_vanish", u.residues_vanish},
                               {"torsion_free", u.torsion_free},
                               {"rank_symmetric", u.rank_symmetric},
                               {"ranks_sum", u.ranks_sum}}},
             {"compatibility", Json{{"connections_equal", cr.connections_equal},
                                    {"residue_square", cr.residue_square},
                                    {"discrepancies", cr.discrepancies}}}};
    return {rep, u.ok() && cr.ok() ? ok : contract_violation};
}

RunResult cmd_selftest(const Json&, const RunConfig& cfg) {
    suites::Context ctx;
    ctx.seed = cfg.seed;
    ctx.enum_guard = cfg.guard_enum;
    ctx.iter_guard = cfg.guard_iter;
    Json list = Json::array();
    bool all = true;
    for (const auto& r : suites::run_all(ctx)) {
        Json facts = Json::object();
        for (const auto& [k, v] : r.facts) facts[k] = v;
        list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"facts", facts}, {"failures", r.failures}});
        all = all && r.passed;
    }
    Json rep{{"seed", cfg.seed}, {"suites", list}, {"passed", all}};
    return {rep, all ? ok : contract_violation};
}

using Command = std::function<RunResult(const Json&, const RunConfig&)>;

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table{
        {"discriminants", cmd_discriminants}, {"monodromy", cmd_monodromy}, {"split", cmd_split},
        {"residues", cmd_residues},           {"semistable", cmd_semistable}, {"cartier", cmd_cartier},
        {"flow", cmd_flow},                   {"nearby-check", cmd_nearby},   {"selftest", cmd_selftest},
    };
    return table;
}

RunResult failure(const std::string& command, int code, const std::string& kind, const std::string& msg) {
    return {Json{{"command", command}, {"error", Json{{"kind", kind}, {"message", msg}}}}, code};
}

}  // namespace

bool supported_prime(std::uint64_t p) {
    if (p < 3 || p >= 65536 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

RunResult run(const RunConfig& cfg) {
    auto it = commands().find(cfg.command);
    if (it == commands().end()) return failure(cfg.command, input_error, "input", "unknown command '" + cfg.command + "'");
    if (cfg.guard_enum == 0 || cfg.guard_iter == 0) return failure(cfg.command, input_error, "input", "guards must be positive");
    if (cfg.p && !supported_prime(*cfg.p))
        return failure(cfg.command, input_error, "input", "--p " + std::to_string(*cfg.p) + " is not an odd prime below 65536");
    try {
        Json in = cfg.input.empty() ? Json::object() : Json::parse(cfg.input);
        RunResult r = it->second(in, cfg);
        Json out{{"command", cfg.command}};
        for (auto& [k, v] : r.report.items()) out[k] = v;
        r.report = std::move(out);
        return r;
    } catch (const Json::parse_error& e) {
        return failure(cfg.command, input_error, "input", std::string("malformed JSON: ") + e.what());
    } catch (const Json::exception& e) {
        return failure(cfg.command, input_error, "input", std::string("unexpected JSON shape: ") + e.what());
    } catch (const InputError& e) {
        return failure(cfg.command, input_error, "input", e.what());
    } catch (const GuardExceeded& e) {
        return failure(cfg.command, undecided, "guard", e.what());
    } catch (const ContractViolation& e) {
        return failure(cfg.command, contract_violation, "contract", e.what());
    } catch (const std::exception& e) {
        return failure(cfg.command, input_error, "input", e.what());
    }
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

bool is_leaf(const Json& v) {
    if (!v.is_object() && !v.is_array()) return true;
    if (v.is_array()) {
        for (const auto& e : v)
            if (e.is_object()) return false;
        return true;
    }
    return false;
}

void text_into(const Json& v, int indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (is_leaf(it.value())) {
                out += pad + it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
            } else {
                out += pad + it.key() + ":\n";
                text_into(it.value(), indent + 2, out);
            }
        }
    } else {
        for (const auto& e : v) {
            out += pad + "-\n";
            text_into(e, indent + 2, out);
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::string out;
    text_into(report, 0, out);
    return out;
}

}  // namespace hdr::cli
