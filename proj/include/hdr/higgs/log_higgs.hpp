#pragma once

// Log Higgs bundles and log connections on (P^1, D) over F_p.
//
// Every field is stored as the coefficient of dx/x. In chart 0 that is
// theta0 (or A0) in the chart-0 frame; in chart 1 it is the coefficient of
// dy/y in the chart-1 frame, written as a function of x. Since
// dy/y = -dx/x this gives
//   theta1 = -T theta0 T^-1,    A1 = x T' T^-1 - T A0 T^-1.

#include <optional>
#include <string>
#include <vector>

#include "hdr/alg/random.hpp"
#include "hdr/p1/bundle.hpp"

namespace hdr::higgs {

using alg::ModMatrix;
using alg::Poly;
using alg::RatFun;
using alg::Rational;
using alg::u32;
using p1::P1Bundle;
using p1::PMat;
using p1::RMat;

struct Point {
    bool at_infinity = false;
    u32 value = 0;

    static Point inf() { return {true, 0}; }
    static Point finite(u32 v) { return {false, v}; }
    std::string to_string() const { return at_infinity ? "inf" : std::to_string(value); }
    friend bool operator==(const Point&, const Point&) = default;
};

struct LogDivisor {
    std::vector<Point> points;  // sorted: finite values ascending, then inf

    bool contains(const Point& pt) const;
    bool has_infinity() const;
    bool has_zero() const { return contains(Point::finite(0)); }
    std::vector<u32> finite() const;
    // finite points other than 0
    std::vector<u32> finite_nonzero() const;
    std::size_t size() const { return points.size(); }
};

// Throws InputError on repeated points or values >= p.
LogDivisor make_divisor(u32 p, std::vector<Point> points);
// "inf" or a residue, as in the JSON schema
Point parse_point(const std::string& text, u32 p);

RMat higgs_chart1(const RMat& transition, const RMat& theta0);
RMat connection_chart1(const RMat& transition, const RMat& a0);
// x d/dx entrywise
RMat log_derivative(const RMat& m);

// Throws InputError naming the point when a chart field has a pole that is
// not allowed: at most simple poles, only on D, and with the dx/x
// normalization at 0 and infinity.
void check_log_poles(const RMat& chart0, const RMat& chart1, const LogDivisor& d, const std::string& what);

struct LogHiggsBundle {
    P1Bundle bundle;
    LogDivisor divisor;
    RMat theta0;
    RMat theta1;

    u32 p() const { return bundle.p; }
    std::size_t rank() const { return bundle.rank(); }
};

struct LogConnection {
    P1Bundle bundle;
    LogDivisor divisor;
    RMat a0;
    RMat a1;

    u32 p() const { return bundle.p; }
    std::size_t rank() const { return bundle.rank(); }
};

LogHiggsBundle make_log_higgs(P1Bundle b, LogDivisor d, RMat theta0);
// Also checks a supplied chart-1 field against the gauge rule.
LogHiggsBundle make_log_higgs(P1Bundle b, LogDivisor d, RMat theta0, const RMat& theta1);
LogConnection make_log_connection(P1Bundle b, LogDivisor d, RMat a0);

// New chart-0 frame s0 = u s0', new chart-1 frame s1' = v s1.
LogHiggsBundle change_frame(const LogHiggsBundle& hb, const RMat& u, const RMat& v);
LogConnection change_frame(const LogConnection& c, const RMat& u, const RMat& v);

// Throws ContractViolation if pt is not on D.
ModMatrix residue(const RMat& chart0, const RMat& chart1, const LogDivisor& d, const Point& pt);
ModMatrix residue(const LogHiggsBundle& hb, const Point& pt);
ModMatrix residue(const LogConnection& c, const Point& pt);

struct TraceReport {
    std::vector<std::pair<Point, u32>> traces;
    u32 sum = 0;
    u32 expected = 0;
    bool holds = false;
};
// Higgs: the traces sum to 0. Connection: they sum to -deg E mod p.
TraceReport residue_trace_sum(const LogHiggsBundle& hb);
TraceReport residue_trace_sum(const LogConnection& c);

// least l with m^{l+1} = 0, or nullopt if m is not nilpotent
std::optional<unsigned> nilpotency_level(const ModMatrix& m);
std::optional<unsigned> nilpotency_level(const RMat& m);

enum class Verdict { semistable, unstable, undecided };
std::string to_string(Verdict v);

struct SemistabilityResult {
    Verdict verdict = Verdict::undecided;
    std::optional<p1::SubBundle> witness;
    std::string note;
    std::size_t candidates_tested = 0;
};

inline constexpr std::size_t kDefaultEnumGuard = 1000000;

SemistabilityResult is_semistable_rank2(const LogHiggsBundle& hb, std::size_t guard = kDefaultEnumGuard);

struct FlagCandidate {
    std::string label;
    p1::SubBundle sub;
    bool destabilizing = false;
};
struct HeuristicReport {
    std::vector<FlagCandidate> candidates;
    bool complete = false;  // never claimed
};
HeuristicReport invariant_flag_heuristic(const LogHiggsBundle& hb);

// Graded log Higgs bundle: block diagonal transition, blocks at offsets,
// theta maps the block of Hodge index q into the block of index q - 1.
struct HodgeSystem {
    LogHiggsBundle higgs;
    std::vector<std::size_t> offsets;  // block starts plus rank at the end
    std::vector<int> hodge_index;      // one per block

    std::size_t blocks() const { return hodge_index.size(); }
};
bool is_hodge_system(const HodgeSystem& s);

struct GradingResult {
    HodgeSystem system;
    std::vector<p1::SubBundle> flag;  // increasing, proper steps only
    std::optional<SemistabilityResult> certificate;  // rank <= 2
    std::optional<HeuristicReport> heuristic;        // rank >= 3
};
// Grades by the saturated kernel flag ker theta in ker theta^2 in ...; the
// piece ker theta^j / ker theta^{j-1} gets Hodge index j - 1.
GradingResult griffiths_grading(const LogHiggsBundle& hb, std::size_t guard = kDefaultEnumGuard);

struct SemipositivityReport {
    std::size_t kernel_rank = 0;
    std::vector<int> kernel_type;
    std::vector<int> max_degrees;  // by subsheaf rank 1..rank K
    bool semistable_certified = false;
    bool passes = false;
};
// Throws ContractViolation unless deg E = 0 and, for rank <= 2, hb is
// certified semistable.
SemipositivityReport kernel_semipositivity_check(const LogHiggsBundle& hb, std::size_t guard = kDefaultEnumGuard);

// ---- random data ----

// Strictly lower triangular theta in the split frame of the given type
// (entries in order), then a random frame change in both charts when
// gauge_steps > 0.
LogHiggsBundle random_nilpotent_higgs(alg::Rng& rng, u32 p, const std::vector<int>& type, const LogDivisor& d,
                                      int gauge_steps);
LogDivisor random_divisor(alg::Rng& rng, u32 p, std::size_t max_points);

}  // namespace hdr::higgs
