#include "hdr/higgs/log_higgs.hpp"

#include <algorithm>
#include <map>

#include "hdr/alg/linalg.hpp"
#include "hdr/errors.hpp"

namespace hdr::higgs {

namespace {

RMat inverse_or_throw(const RMat& m) {
    auto inv = alg::inverse_matrix(m);
    if (!inv) throw ContractViolation("matrix is not invertible");
    return *inv;
}

// number of points of P^{n-1}(F_p), capped at cap + 1
std::size_t projective_count(u32 p, std::size_t n, std::size_t cap) {
    if (n == 0) return 0;
    std::size_t total = 0, pw = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total += pw;
        if (total > cap) return cap + 1;
        if (pw > cap) return cap + 1;
        pw *= p;
    }
    return total;
}

bool same_span(const RMat& a, const RMat& b) {
    std::size_t ra = alg::rank(a);
    return ra == alg::rank(b) && ra == alg::rank(alg::hstack(a, b));
}

RMat vector_column(const PMat& basis, const std::vector<u32>& c) {
    u32 p = basis.zero().prime();
    RMat v(basis.rows(), 1, RatFun(p));
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Poly s(p);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k]) s += basis(i, k).scaled(c[k]);
        v(i, 0) = RatFun(s);
    }
    return v;
}

// odometer over c[from..]
bool advance(std::vector<u32>& c, std::size_t from, u32 p) {
    for (std::size_t k = c.size(); k-- > from;) {
        if (++c[k] < p) return true;
        c[k] = 0;
    }
    return false;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

bool LogDivisor::contains(const Point& pt) const {
    return std::find(points.begin(), points.end(), pt) != points.end();
}

bool LogDivisor::has_infinity() const { return contains(Point::inf()); }

std::vector<u32> LogDivisor::finite() const {
    std::vector<u32> out;
    for (const Point& pt : points)
        if (!pt.at_infinity) out.push_back(pt.value);
    return out;
}

std::vector<u32> LogDivisor::finite_nonzero() const {
    std::vector<u32> out;
    for (u32 v : finite())
        if (v) out.push_back(v);
    return out;
}

LogDivisor make_divisor(u32 p, std::vector<Point> points) {
    for (const Point& pt : points)
        if (!pt.at_infinity && pt.value >= p) throw InputError("divisor point " + pt.to_string() + " is not in F_p");
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
        if (a.at_infinity != b.at_infinity) return !a.at_infinity;
        return a.value < b.value;
    });
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1]) throw InputError("divisor point " + points[i].to_string() + " repeated");
    return LogDivisor{std::move(points)};
}

Point parse_point(const std::string& text, u32 p) {
    if (text == "inf" || text == "infinity") return Point::inf();
    try {
        std::size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw InputError("bad divisor point '" + text + "'");
        long long r = v % static_cast<long long>(p);
        return Point::finite(static_cast<u32>(r < 0 ? r + p : r));
    } catch (const std::logic_error&) {
        throw InputError("bad divisor point '" + text + "'");
    }
}

RMat log_derivative(const RMat& m) {
    u32 p = m.zero().prime();
    RatFun x = RatFun::x(p);
    return m.map([&](const RatFun& f) { return x * f.derivative(); });
}

RMat higgs_chart1(const RMat& transition, const RMat& theta0) {
    RMat inv = inverse_or_throw(transition);
    RMat out = transition * theta0 * inv;
    return out.map([](const RatFun& f) { return -f; });
}

RMat connection_chart1(const RMat& transition, const RMat& a0) {
    RMat inv = inverse_or_throw(transition);
    return log_derivative(transition) * inv - transition * a0 * inv;
}

void check_log_poles(const RMat& chart0, const RMat& chart1, const LogDivisor& d, const std::string& what) {
    const u32 p = chart0.zero().prime();
    for (std::size_t i = 0; i < chart0.rows(); ++i)
        for (std::size_t j = 0; j < chart0.cols(); ++j) {
            const RatFun& f = chart0(i, j);
            if (f.is_zero()) continue;
            Poly den = f.den();
            for (u32 s : d.finite_nonzero()) {
                Poly lin = Poly::x(p) - Poly::constant(p, s);
                if (lin.divides(den)) {
                    den = den / lin;
                    if (lin.divides(den))
                        throw InputError(what + " has a pole of order > 1 at " + std::to_string(s));
                }
            }
            if (den.degree() > 0) {
                if (den.eval(0) == 0)
                    throw InputError(what + " has a pole at 0 beyond the log pole of dx/x");
                throw InputError(what + " has a pole off the divisor: denominator " + f.den().to_string());
            }
            if (!d.has_zero() && f.order_at(0) < 1)
                throw InputError(what + " has a log pole at 0, which is not on the divisor");
        }
    for (std::size_t i = 0; i < chart1.rows(); ++i)
        for (std::size_t j = 0; j < chart1.cols(); ++j) {
            const RatFun& f = chart1(i, j);
            if (f.is_zero()) continue;
            int ord = f.order_at_infinity();
            if (ord < 0) throw InputError(what + " has a pole of order > 1 at inf");
            if (!d.has_infinity() && ord < 1)
                throw InputError(what + " has a log pole at inf, which is not on the divisor");
        }
}

LogHiggsBundle make_log_higgs(P1Bundle b, LogDivisor d, RMat theta0) {
    if (theta0.rows() != b.rank() || theta0.cols() != b.rank())
        throw InputError("theta0 must be " + std::to_string(b.rank()) + "x" + std::to_string(b.rank()));
    RMat theta1 = higgs_chart1(b.transition, theta0);
    check_log_poles(theta0, theta1, d, "theta");
    return LogHiggsBundle{std::move(b), std::move(d), std::move(theta0), std::move(theta1)};
}

LogHiggsBundle make_log_higgs(P1Bundle b, LogDivisor d, RMat theta0, const RMat& theta1) {
    LogHiggsBundle hb = make_log_higgs(std::move(b), std::move(d), std::move(theta0));
    if (!(hb.theta1 == theta1)) throw InputError("theta1 does not equal -T theta0 T^-1");
    return hb;
}

LogConnection make_log_connection(P1Bundle b, LogDivisor d, RMat a0) {
    if (a0.rows() != b.rank() || a0.cols() != b.rank()) throw InputError("connection matrix has the wrong size");
    RMat a1 = connection_chart1(b.transition, a0);
    check_log_poles(a0, a1, d, "connection");
    return LogConnection{std::move(b), std::move(d), std::move(a0), std::move(a1)};
}

LogHiggsBundle change_frame(const LogHiggsBundle& hb, const RMat& u, const RMat& v) {
    RMat t = v * hb.bundle.transition * u;
    RMat theta0 = inverse_or_throw(u) * hb.theta0 * u;
    return LogHiggsBundle{P1Bundle{hb.p(), t}, hb.divisor, theta0, higgs_chart1(t, theta0)};
}

LogConnection change_frame(const LogConnection& c, const RMat& u, const RMat& v) {
    RMat t = v * c.bundle.transition * u;
    RMat uinv = inverse_or_throw(u);
    RMat a0 = uinv * c.a0 * u + uinv * log_derivative(u);
    return LogConnection{P1Bundle{c.p(), t}, c.divisor, a0, connection_chart1(t, a0)};
}

ModMatrix residue(const RMat& chart0, const RMat& chart1, const LogDivisor& d, const Point& pt) {
    if (!d.contains(pt)) throw ContractViolation("point " + pt.to_string() + " is not on the divisor");
    const u32 p = chart0.zero().prime();
    ModMatrix r(chart0.rows(), chart0.cols(), p);
    for (std::size_t i = 0; i < chart0.rows(); ++i)
        for (std::size_t j = 0; j < chart0.cols(); ++j) {
            if (pt.at_infinity) {
                r.at(i, j) = chart1(i, j).invert_variable().eval(0);
            } else if (pt.value == 0) {
                r.at(i, j) = chart0(i, j).eval(0);
            } else {
                RatFun lin(Poly::x(p) - Poly::constant(p, pt.value));
                r.at(i, j) = alg::mul_mod((lin * chart0(i, j)).eval(pt.value), alg::inv_mod(pt.value, p), p);
            }
        }
    return r;
}

ModMatrix residue(const LogHiggsBundle& hb, const Point& pt) { return residue(hb.theta0, hb.theta1, hb.divisor, pt); }
ModMatrix residue(const LogConnection& c, const Point& pt) { return residue(c.a0, c.a1, c.divisor, pt); }

namespace {

template <class Obj>
TraceReport trace_report(const Obj& obj, u32 expected) {
    const u32 p = obj.p();
    TraceReport rep;
    for (const Point& pt : obj.divisor.points) {
        ModMatrix r = residue(obj, pt);
        u32 t = 0;
        for (std::size_t i = 0; i < r.rows(); ++i) t = alg::add_mod(t, r.at(i, i), p);
        rep.traces.emplace_back(pt, t);
        rep.sum = alg::add_mod(rep.sum, t, p);
    }
    rep.expected = expected;
    rep.holds = rep.sum == expected;
    return rep;
}

}  // namespace

TraceReport residue_trace_sum(const LogHiggsBundle& hb) { return trace_report(hb, 0); }

TraceReport residue_trace_sum(const LogConnection& c) {
    const u32 p = c.p();
    int deg = p1::degree_and_slope(c.bundle).degree;
    long long e = -static_cast<long long>(deg) % static_cast<long long>(p);
    return trace_report(c, static_cast<u32>(e < 0 ? e + p : e));
}

std::optional<unsigned> nilpotency_level(const ModMatrix& m) {
    unsigned level = 0;
    if (!alg::is_nilpotent(m, &level)) return std::nullopt;
    return level;
}

std::optional<unsigned> nilpotency_level(const RMat& m) {
    unsigned level = 0;
    if (!alg::is_nilpotent(m, &level)) return std::nullopt;
    return level;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::semistable: return "semistable";
        case Verdict::unstable: return "unstable";
        case Verdict::undecided: return "undecided-by-guard";
    }
    return "?";
}

SemistabilityResult is_semistable_rank2(const LogHiggsBundle& hb, std::size_t guard) {
    if (hb.rank() != 2) throw ContractViolation("exact semistability is only available in rank 2");
    const u32 p = hb.p();
    SemistabilityResult res;
    p1::Splitting split = p1::birkhoff_split(hb.bundle);
    const int deg = split.type[0] + split.type[1];
    // d > deg/2
    const int lowest = floor_div(deg, 2) + 1;
    for (int d = split.type[0]; d >= lowest; --d) {
        PMat basis = p1::global_sections(hb.bundle, -d);
        const std::size_t n = basis.cols();
        if (n == 0) continue;
        if (projective_count(p, n, guard) > guard) {
            res.verdict = Verdict::undecided;
            res.note = "projective space of H^0(E(" + std::to_string(-d) + ")) exceeds the enumeration guard";
            return res;
        }
        // coefficient vectors with first nonzero entry 1, in lexicographic order
        for (std::size_t lead = 0; lead < n; ++lead) {
            std::vector<u32> c(n, 0);
            c[lead] = 1;
            for (;;) {
                ++res.candidates_tested;
                RMat s = vector_column(basis, c);
                RMat ts = hb.theta0 * s;
                RatFun wedge = ts(0, 0) * s(1, 0) - ts(1, 0) * s(0, 0);
                if (wedge.is_zero()) {
                    p1::SubBundle line = p1::subbundle_from_span(hb.bundle, s);
                    if (line.degree == d) {
                        res.verdict = Verdict::unstable;
                        res.witness = line;
                        res.note = "theta-invariant line subbundle of degree " + std::to_string(d);
                        return res;
                    }
                }
                if (!advance(c, lead + 1, p)) break;
            }
        }
    }
    res.verdict = Verdict::semistable;
    res.note = "no theta-invariant line subbundle of degree > " + alg::to_string(alg::frac(deg, 2));
    return res;
}

HeuristicReport invariant_flag_heuristic(const LogHiggsBundle& hb) {
    const std::size_t r = hb.rank();
    const Rational mu = p1::degree_and_slope(hb.bundle).slope;
    std::vector<std::pair<std::string, RMat>> spans;
    auto add = [&](const std::string& label, const RMat& w) {
        RMat basis = alg::column_basis(w);
        if (basis.cols() == 0 || basis.cols() == r) return;
        for (const auto& [l, other] : spans)
            if (same_span(other, basis)) return;
        spans.emplace_back(label, basis);
    };
    for (const p1::HNStep& step : p1::hn_filtration_plain(hb.bundle)) {
        const RMat& w = step.sub.chart0;
        if (alg::in_span(w, RMat(hb.theta0 * w))) add("hn", w);
    }
    RMat pw = hb.theta0;
    for (std::size_t k = 1; k < r && !pw.is_zero_matrix(); ++k) {
        add("ker theta^" + std::to_string(k), alg::kernel(pw));
        add("im theta^" + std::to_string(k), pw);
        pw = pw * hb.theta0;
    }
    const std::size_t base = spans.size();
    for (std::size_t i = 0; i < base; ++i)
        for (std::size_t j = i + 1; j < base; ++j) {
            add(spans[i].first + " + " + spans[j].first, alg::sum_spaces(spans[i].second, spans[j].second));
            add(spans[i].first + " cap " + spans[j].first, alg::intersect_spaces(spans[i].second, spans[j].second));
        }
    HeuristicReport rep;
    for (const auto& [label, w] : spans) {
        p1::SubBundle sb = p1::subbundle_from_span(hb.bundle, w);
        bool bad = sb.slope() > mu;
        rep.candidates.push_back({label, std::move(sb), bad});
    }
    return rep;
}

bool is_hodge_system(const HodgeSystem& s) {
    const RMat& th = s.higgs.theta0;
    const RMat& t = s.higgs.bundle.transition;
    for (std::size_t u = 0; u < s.blocks(); ++u)
        for (std::size_t v = 0; v < s.blocks(); ++v)
            for (std::size_t i = s.offsets[u]; i < s.offsets[u + 1]; ++i)
                for (std::size_t j = s.offsets[v]; j < s.offsets[v + 1]; ++j) {
                    if (u != v && !t(i, j).is_zero()) return false;
                    if (s.hodge_index[u] != s.hodge_index[v] - 1 && !th(i, j).is_zero()) return false;
                }
    return true;
}

GradingResult griffiths_grading(const LogHiggsBundle& hb, std::size_t guard) {
    const u32 p = hb.p();
    const std::size_t r = hb.rank();
    if (!nilpotency_level(hb.theta0)) throw ContractViolation("griffiths_grading needs a nilpotent Higgs field");
    std::vector<RMat> spans;
    RMat pw = hb.theta0;
    while (!pw.is_zero_matrix()) {
        RMat k = alg::kernel(pw);
        if (spans.empty() || alg::rank(k) > alg::rank(spans.back())) spans.push_back(k);
        pw = pw * hb.theta0;
    }
    p1::AdaptedFrames fr = p1::adapted_frames(hb.bundle, spans);
    RMat th = alg::inverse_matrix(fr.chart0).value() * hb.theta0 * fr.chart0;

    GradingResult out;
    HodgeSystem& sys = out.system;
    sys.offsets = fr.offsets;
    const std::size_t nb = fr.offsets.size() - 1;
    RMat tgr(r, r, RatFun(p)), thgr(r, r, RatFun(p));
    for (std::size_t b = 0; b < nb; ++b) {
        sys.hodge_index.push_back(static_cast<int>(b));
        for (std::size_t i = fr.offsets[b]; i < fr.offsets[b + 1]; ++i) {
            for (std::size_t j = fr.offsets[b]; j < fr.offsets[b + 1]; ++j) tgr(i, j) = fr.transition(i, j);
            if (b + 1 < nb)
                for (std::size_t j = fr.offsets[b + 1]; j < fr.offsets[b + 2]; ++j) thgr(i, j) = th(i, j);
        }
    }
    sys.higgs = make_log_higgs(P1Bundle{p, tgr}, hb.divisor, thgr);
    for (const RMat& w : spans) out.flag.push_back(p1::subbundle_from_span(hb.bundle, w));
    if (r <= 2) {
        if (r == 2) out.certificate = is_semistable_rank2(sys.higgs, guard);
    } else {
        out.heuristic = invariant_flag_heuristic(sys.higgs);
    }
    return out;
}

SemipositivityReport kernel_semipositivity_check(const LogHiggsBundle& hb, std::size_t guard) {
    if (p1::det_exponent(hb.bundle) != 0) throw ContractViolation("semipositivity check needs deg E = 0");
    SemipositivityReport rep;
    if (hb.rank() == 1) {
        rep.semistable_certified = true;
    } else if (hb.rank() == 2) {
        SemistabilityResult ss = is_semistable_rank2(hb, guard);
        if (ss.verdict == Verdict::unstable) throw ContractViolation("semipositivity check needs a semistable input");
        rep.semistable_certified = ss.verdict == Verdict::semistable;
    }
    RMat k = alg::kernel(hb.theta0);
    rep.kernel_rank = k.cols();
    if (k.cols() == 0) {
        rep.passes = true;
        return rep;
    }
    p1::SubBundle sb = p1::subbundle_from_span(hb.bundle, k);
    rep.kernel_type = p1::birkhoff_split(P1Bundle{hb.p(), sb.transition}).type;
    rep.passes = true;
    for (std::size_t s = 1; s <= rep.kernel_type.size(); ++s) {
        rep.max_degrees.push_back(p1::max_subsheaf_degree(rep.kernel_type, s));
        if (rep.max_degrees.back() > 0) rep.passes = false;
    }
    return rep;
}

LogDivisor random_divisor(alg::Rng& rng, u32 p, std::size_t max_points) {
    std::vector<Point> all;
    for (u32 v = 0; v < p; ++v) all.push_back(Point::finite(v));
    all.push_back(Point::inf());
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t n = static_cast<std::size_t>(alg::random_int(rng, 1, static_cast<int>(std::min(max_points, all.size()))));
    all.resize(n);
    return make_divisor(p, all);
}

LogHiggsBundle random_nilpotent_higgs(alg::Rng& rng, u32 p, const std::vector<int>& type, const LogDivisor& d,
                                      int gauge_steps) {
    const std::size_t r = type.size();
    RMat t = p1::diagonal_transition(p, type);
    Poly denom = Poly::constant(p, 1);
    for (u32 s : d.finite_nonzero()) denom = denom * (Poly::x(p) - Poly::constant(p, s));
    const int m = static_cast<int>(d.finite_nonzero().size());
    const int low = d.has_zero() ? 0 : 1;
    RMat theta(r, r, RatFun(p));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            int high = type[i] - type[j] + m - (d.has_infinity() ? 0 : 1);
            if (high < low) continue;
            Poly h = alg::random_poly(rng, p, high - low).shifted(low);
            theta(i, j) = RatFun(h, denom);
        }
    LogHiggsBundle hb = make_log_higgs(P1Bundle{p, t}, d, theta);
    if (gauge_steps <= 0) return hb;
    RMat u = alg::to_ratfun(alg::random_unimodular(rng, r, p, 1, gauge_steps));
    RMat v = p1::from_chart1_poly(alg::random_unimodular(rng, r, p, 1, gauge_steps));
    LogHiggsBundle out = change_frame(hb, u, v);
    check_log_poles(out.theta0, out.theta1, d, "theta");
    return out;
}

}  // namespace hdr::higgs
