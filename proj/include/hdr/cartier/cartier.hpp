#pragma once

// Inverse Cartier transform on (P^1, D) from W_2 Frobenius lifts.
//
// A lift is kept as its mod-p perturbation per chart:
//   F*(x) = x^p + p a(x) on chart 0,  F*(y) = y^p + p b(y) on chart 1.
// Divisor points are lifted by Teichmueller representatives, so the log
// condition at s reads a = B_s mod (x - s)^p with
//   B_s = ((x - s)^p - x^p + s^p) / p  reduced mod p.

#include <optional>
#include <string>
#include <vector>

#include "hdr/higgs/log_higgs.hpp"

namespace hdr::cartier {

using alg::ModMatrix;
using alg::Poly;
using alg::RatFun;
using alg::u32;
using higgs::LogConnection;
using higgs::LogDivisor;
using higgs::LogHiggsBundle;
using p1::P1Bundle;
using p1::RMat;

struct FrobeniusLift {
    Poly chart0;  // a(x)
    Poly chart1;  // b(y)
};

// values of D in the coordinate of the given chart
std::vector<u32> chart_points(u32 p, const LogDivisor& d, int chart);

Poly log_condition_target(u32 p, u32 s);
// Least-degree lift satisfying the log condition at every point of D.
FrobeniusLift default_lift(u32 p, const LogDivisor& d);
// Throws ContractViolation naming the first point where the log condition fails.
void check_lift(u32 p, const FrobeniusLift& lift, const LogDivisor& d);
// default lift plus random multiples of the vanishing polynomials
FrobeniusLift random_lift(alg::Rng& rng, u32 p, const LogDivisor& d, int max_deg);

// zeta(dx/x) = zeta_log * dx/x and zeta(dx) = zeta_dx * dx
struct ZetaMap {
    RatFun zeta_log;
    RatFun zeta_dx;
};
ZetaMap zeta(u32 p, const Poly& a);

// F*(f)(x) = f(x^p), entrywise
RMat frobenius(const RMat& m, u32 p);
// sum_{i<p} m^i / i!; needs m^p = 0
RMat truncated_exp(const RMat& m, u32 p);

struct CartierResult {
    LogConnection connection;
    RMat tau;   // chart-0 frame: chart-1 lift minus chart-0 lift applied to F*theta
    RMat glue;  // exp(-tau); V has transition T(x^p) * glue
};

// Throws InputError if rank > p or theta is not nilpotent of level <= p - 1,
// ContractViolation if the glued charts do not intertwine.
CartierResult inverse_cartier(const LogHiggsBundle& hb, const FrobeniusLift& lift);
CartierResult inverse_cartier(const LogHiggsBundle& hb);

struct PCurvature {
    RMat psi0;  // psi(x d/dx) in the chart-0 frame
    std::optional<unsigned> level;
    bool residues_nilpotent = false;
    // psi nilpotent of level <= p - 1 with nilpotent residues
    bool in_range = false;
};
// psi(delta) = (nabla_delta)^p - nabla_delta for delta = x d/dx
PCurvature p_curvature(const LogConnection& c);
// For Cartier outputs: psi(x d/dx) = -F*theta0 in the pulled-back frame.
RMat expected_p_curvature(const LogHiggsBundle& hb);

struct GlueChange {
    RMat tau0, tau1;  // chart-0 frame, chart-1 frame
    RMat g0, g1;      // exp(-tau)
};
GlueChange glue_change_of_lift(const FrobeniusLift& lift1, const FrobeniusLift& lift2, const LogHiggsBundle& hb);
// g carries inverse_cartier(hb, lift1) to inverse_cartier(hb, lift2) exactly
bool intertwines(const GlueChange& g, const LogConnection& c1, const LogConnection& c2);

// x -> lambda x^m, y -> lambda^-1 y^m
struct MonomialMap {
    int m = 1;
    u32 lambda = 1;
};
RatFun pull_back(const RatFun& f, const MonomialMap& f_map);
LogHiggsBundle pull_back(const LogHiggsBundle& hb, const MonomialMap& f);
LogConnection pull_back(const LogConnection& c, const MonomialMap& f);

struct FunctorialityReport {
    bool equal = false;
    std::vector<std::string> discrepancies;
};
// Compares f* C^-1(hb) with C^-1(f* hb). The target lift lives on the base,
// the source lift upstairs; they must form a good lifting of f.
FunctorialityReport check_functoriality(const MonomialMap& f, const LogHiggsBundle& hb, const FrobeniusLift& target,
                                        const FrobeniusLift& source);
FunctorialityReport check_functoriality(const MonomialMap& f, const LogHiggsBundle& hb);

}  // namespace hdr::cartier
