#include "hdr/cartier/cartier.hpp"

#include "hdr/alg/linalg.hpp"
#include "hdr/errors.hpp"

namespace hdr::cartier {

namespace {

Poly linear(u32 p, u32 s) { return Poly::x(p) - Poly::constant(p, s); }

Poly power(Poly f, int e) {
    Poly out = Poly::constant(f.prime(), 1);
    for (int i = 0; i < e; ++i) out = out * f;
    return out;
}

// a = target mod modulus for every pair, deg a < deg prod(modulus)
Poly crt(u32 p, const std::vector<std::pair<Poly, Poly>>& congruences) {
    Poly a(p), m = Poly::constant(p, 1);
    for (const auto& [target, modulus] : congruences) {
        alg::Xgcd e = alg::xgcd(m, modulus);  // s m + t modulus = 1
        Poly diff = (target - a) % modulus;
        a = a + m * ((diff * e.s) % modulus);
        m = m * modulus;
        a = a % m;
    }
    return a;
}

RatFun scalar(u32 p, long long c) { return RatFun::constant(p, c); }

RMat scaled(const RMat& m, const RatFun& f) { return m.map([&](const RatFun& e) { return f * e; }); }

RMat inverse_or_throw(const RMat& m) {
    auto inv = alg::inverse_matrix(m);
    if (!inv) throw ContractViolation("gauge matrix is not invertible");
    return *inv;
}

// f(x) -> f(1/x) for a polynomial given in the chart-1 variable
RatFun chart1_to_x(const Poly& f) { return RatFun(f).invert_variable(); }

}  // namespace

std::vector<u32> chart_points(u32 p, const LogDivisor& d, int chart) {
    if (chart == 0) return d.finite();
    std::vector<u32> out;
    if (d.has_infinity()) out.push_back(0);
    for (u32 s : d.finite_nonzero()) out.push_back(alg::inv_mod(s, p));
    return out;
}

Poly log_condition_target(u32 p, u32 s) {
    // B_s = sum_{0<k<p} (binom(p,k)/p) x^k (-s)^{p-k}; binom(p,k)/p = (p-1)!/(k!(p-k)!) = -1/(k!(p-k)!)
    std::vector<u32> fact(p, 1);
    for (u32 i = 1; i < p; ++i) fact[i] = alg::mul_mod(fact[i - 1], i, p);
    const u32 neg_s = alg::neg_mod(s % p, p);
    std::vector<u32> c(p, 0);
    for (u32 k = 1; k < p; ++k) {
        u32 q = alg::neg_mod(alg::inv_mod(alg::mul_mod(fact[k], fact[p - k], p), p), p);
        c[k] = alg::mul_mod(q, alg::pow_mod(neg_s, p - k, p), p);
    }
    return Poly(p, c);
}

namespace {

Poly default_chart_lift(u32 p, const std::vector<u32>& pts) {
    std::vector<std::pair<Poly, Poly>> cong;
    for (u32 s : pts) cong.emplace_back(log_condition_target(p, s), power(linear(p, s), static_cast<int>(p)));
    return crt(p, cong);
}

Poly vanishing(u32 p, const std::vector<u32>& pts) {
    Poly v = Poly::constant(p, 1);
    for (u32 s : pts) v = v * power(linear(p, s), static_cast<int>(p));
    return v;
}

}  // namespace

FrobeniusLift default_lift(u32 p, const LogDivisor& d) {
    return {default_chart_lift(p, chart_points(p, d, 0)), default_chart_lift(p, chart_points(p, d, 1))};
}

void check_lift(u32 p, const FrobeniusLift& lift, const LogDivisor& d) {
    for (int chart = 0; chart < 2; ++chart) {
        const Poly& a = chart == 0 ? lift.chart0 : lift.chart1;
        for (u32 s : chart_points(p, d, chart)) {
            Poly m = power(linear(p, s), static_cast<int>(p));
            if (!m.divides(a - log_condition_target(p, s))) {
                std::string name = chart == 0 ? std::to_string(s)
                                              : (s == 0 ? std::string("inf") : std::to_string(alg::inv_mod(s, p)));
                throw ContractViolation("Frobenius lift does not preserve the divisor at " + name);
            }
        }
    }
}

FrobeniusLift random_lift(alg::Rng& rng, u32 p, const LogDivisor& d, int max_deg) {
    FrobeniusLift l = default_lift(p, d);
    l.chart0 += alg::random_poly(rng, p, max_deg) * vanishing(p, chart_points(p, d, 0));
    l.chart1 += alg::random_poly(rng, p, max_deg) * vanishing(p, chart_points(p, d, 1));
    return l;
}

ZetaMap zeta(u32 p, const Poly& a) {
    Poly xp = Poly::monomial(p, 1, static_cast<int>(p));
    Poly da = a.derivative();
    return {RatFun(xp + da.shifted(1), xp), RatFun(Poly::monomial(p, 1, static_cast<int>(p) - 1) + da)};
}

RMat frobenius(const RMat& m, u32 p) {
    return m.map([&](const RatFun& f) { return f.substitute_power(static_cast<int>(p)); });
}

RMat truncated_exp(const RMat& m, u32 p) {
    if (!alg::is_nilpotent(m)) throw ContractViolation("exponential of a non-nilpotent matrix");
    RMat out = RMat::identity(m.rows(), RatFun(p));
    RMat term = out;
    for (u32 i = 1; i < p; ++i) {
        term = scaled(term * m, scalar(p, alg::inv_mod(i, p)));
        out = out + term;
    }
    return out;
}

namespace {

void check_preconditions(const LogHiggsBundle& hb) {
    const u32 p = hb.p();
    if (hb.rank() > p) throw InputError("rank " + std::to_string(hb.rank()) + " exceeds p = " + std::to_string(p));
    auto level = higgs::nilpotency_level(hb.theta0);
    if (!level)
        throw InputError("theta is not nilpotent: theta^" + std::to_string(hb.rank()) + " != 0, so no nilpotency level <= p - 1 = " +
                         std::to_string(p - 1));
    if (*level > p - 1)
        throw InputError("theta has nilpotency level " + std::to_string(*level) + " > p - 1 = " + std::to_string(p - 1));
}

}  // namespace

CartierResult inverse_cartier(const LogHiggsBundle& hb, const FrobeniusLift& lift) {
    check_preconditions(hb);
    const u32 p = hb.p();
    check_lift(p, lift, hb.divisor);

    RMat phi0 = frobenius(hb.theta0, p);
    RMat phi1 = frobenius(hb.theta1, p);
    RatFun z0 = zeta(p, lift.chart0).zeta_log;
    RatFun z1 = zeta(p, lift.chart1).zeta_log.invert_variable();
    RMat a0 = scaled(phi0, z0);
    RMat a1_direct = scaled(phi1, z1);

    // the chart-1 lift read in x: F*(x) = x^p - p b(1/x) x^{2p}
    RatFun xp = RatFun::laurent_monomial(p, 1, static_cast<int>(p));
    RatFun a_from_chart1 = -(chart1_to_x(lift.chart1) * xp * xp);
    RatFun diff = (a_from_chart1 - RatFun(lift.chart0)) * xp.inverse();
    RMat tau = scaled(phi0, diff);
    RMat glue = truncated_exp(scaled(tau, scalar(p, -1)), p);

    P1Bundle v = p1::make_bundle(p, frobenius(hb.bundle.transition, p) * glue);
    LogConnection c = higgs::make_log_connection(v, hb.divisor, a0);
    if (!(c.a1 == a1_direct)) throw ContractViolation("chart connections do not glue under exp(-tau)");
    return {std::move(c), std::move(tau), std::move(glue)};
}

CartierResult inverse_cartier(const LogHiggsBundle& hb) { return inverse_cartier(hb, default_lift(hb.p(), hb.divisor)); }

PCurvature p_curvature(const LogConnection& c) {
    const u32 p = c.p();
    PCurvature out;
    RMat m = c.a0;
    for (u32 k = 1; k < p; ++k) m = higgs::log_derivative(m) + c.a0 * m;
    out.psi0 = m - c.a0;
    out.level = higgs::nilpotency_level(out.psi0);
    out.residues_nilpotent = true;
    for (const higgs::Point& pt : c.divisor.points)
        if (!higgs::nilpotency_level(higgs::residue(c, pt))) out.residues_nilpotent = false;
    out.in_range = out.level && *out.level <= p - 1 && out.residues_nilpotent;
    return out;
}

RMat expected_p_curvature(const LogHiggsBundle& hb) {
    return scaled(frobenius(hb.theta0, hb.p()), scalar(hb.p(), -1));
}

GlueChange glue_change_of_lift(const FrobeniusLift& lift1, const FrobeniusLift& lift2, const LogHiggsBundle& hb) {
    check_preconditions(hb);
    const u32 p = hb.p();
    check_lift(p, lift1, hb.divisor);
    check_lift(p, lift2, hb.divisor);
    RatFun xp = RatFun::laurent_monomial(p, 1, static_cast<int>(p));
    GlueChange g;
    g.tau0 = scaled(frobenius(hb.theta0, p), RatFun(lift2.chart0 - lift1.chart0) * xp.inverse());
    g.tau1 = scaled(frobenius(hb.theta1, p), chart1_to_x(lift2.chart1 - lift1.chart1) * xp);
    g.g0 = truncated_exp(scaled(g.tau0, scalar(p, -1)), p);
    g.g1 = truncated_exp(scaled(g.tau1, scalar(p, -1)), p);
    return g;
}

bool intertwines(const GlueChange& g, const LogConnection& c1, const LogConnection& c2) {
    RMat g0inv = inverse_or_throw(g.g0), g1inv = inverse_or_throw(g.g1);
    if (!(c2.bundle.transition == g.g1 * c1.bundle.transition * g0inv)) return false;
    if (!(c2.a0 == g.g0 * c1.a0 * g0inv - higgs::log_derivative(g.g0) * g0inv)) return false;
    // y d/dy = -x d/dx on the chart-1 side
    return c2.a1 == g.g1 * c1.a1 * g1inv + higgs::log_derivative(g.g1) * g1inv;
}

RatFun pull_back(const RatFun& f, const MonomialMap& f_map) {
    return f.scale_variable(f_map.lambda).substitute_power(f_map.m);
}

namespace {

void check_map(const MonomialMap& f, const LogDivisor& d, u32 p) {
    if (f.m < 1) throw ContractViolation("monomial map needs m >= 1");
    if (f.lambda % p == 0) throw ContractViolation("monomial map needs lambda != 0");
    for (u32 s : d.finite_nonzero())
        throw ContractViolation("functoriality needs D inside {0, inf}; found " + std::to_string(s));
}

RMat pull_field(const RMat& m, const MonomialMap& f, u32 p) {
    return m.map([&](const RatFun& e) { return RatFun::constant(p, f.m) * pull_back(e, f); });
}

}  // namespace

LogHiggsBundle pull_back(const LogHiggsBundle& hb, const MonomialMap& f) {
    const u32 p = hb.p();
    check_map(f, hb.divisor, p);
    RMat t = hb.bundle.transition.map([&](const RatFun& e) { return pull_back(e, f); });
    return higgs::make_log_higgs(P1Bundle{p, t}, hb.divisor, pull_field(hb.theta0, f, p));
}

LogConnection pull_back(const LogConnection& c, const MonomialMap& f) {
    const u32 p = c.p();
    check_map(f, c.divisor, p);
    RMat t = c.bundle.transition.map([&](const RatFun& e) { return pull_back(e, f); });
    return higgs::make_log_connection(P1Bundle{p, t}, c.divisor, pull_field(c.a0, f, p));
}

FunctorialityReport check_functoriality(const MonomialMap& f, const LogHiggsBundle& hb, const FrobeniusLift& target,
                                        const FrobeniusLift& source) {
    const u32 p = hb.p();
    check_map(f, hb.divisor, p);
    // good lifting: a(lambda x^m) = m lambda x^{p(m-1)} a_s(x), and likewise with lambda^-1 on chart 1
    const int shift = static_cast<int>(p) * (f.m - 1);
    const u32 mm = static_cast<u32>(f.m % static_cast<int>(p));
    const u32 linv = alg::inv_mod(f.lambda % p, p);
    Poly lhs0 = target.chart0.scale_variable(f.lambda).substitute_power(f.m);
    Poly rhs0 = source.chart0.scaled(alg::mul_mod(mm, f.lambda % p, p)).shifted(shift);
    Poly lhs1 = target.chart1.scale_variable(linv).substitute_power(f.m);
    Poly rhs1 = source.chart1.scaled(alg::mul_mod(mm, linv, p)).shifted(shift);
    if (!(lhs0 == rhs0) || !(lhs1 == rhs1)) throw ContractViolation("incompatible lift data for the monomial map");

    LogConnection left = pull_back(inverse_cartier(hb, target).connection, f);
    LogConnection right = inverse_cartier(pull_back(hb, f), source).connection;
    FunctorialityReport rep;
    if (!(left.bundle.transition == right.bundle.transition)) rep.discrepancies.push_back("transition");
    if (!(left.a0 == right.a0)) rep.discrepancies.push_back("chart-0 connection");
    if (!(left.a1 == right.a1)) rep.discrepancies.push_back("chart-1 connection");
    rep.equal = rep.discrepancies.empty();
    return rep;
}

FunctorialityReport check_functoriality(const MonomialMap& f, const LogHiggsBundle& hb) {
    FrobeniusLift standard = default_lift(hb.p(), hb.divisor);
    return check_functoriality(f, hb, standard, standard);
}

}  // namespace hdr::cartier
