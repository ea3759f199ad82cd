#pragma once

// Higgs-de Rham flow on (P^1, D): E_0 -> V_0 = C^{-1}(E_0) -> E_1 = Gr_S(V_0) -> ...
//
// Filtrations are increasing chains of subbundles F_1 < F_2 < ... < V, so F_1
// is the top Hodge piece. In a frame adapted to the chain the connection is
// block upper Hessenberg, and the graded Higgs field is its subdiagonal.

#include <optional>
#include <string>
#include <vector>

#include "hdr/cartier/cartier.hpp"

namespace hdr::flow {

using alg::u32;
using cartier::FrobeniusLift;
using higgs::HodgeSystem;
using higgs::LogConnection;
using higgs::LogDivisor;
using higgs::LogHiggsBundle;
using higgs::SemistabilityResult;
using p1::RMat;

inline constexpr std::size_t kDefaultIterGuard = 50;

enum class SimpsonStatus { resolved, unresolved };
std::string to_string(SimpsonStatus s);

struct SimpsonResult {
    SimpsonStatus status = SimpsonStatus::unresolved;
    std::vector<p1::SubBundle> filtration;  // increasing, proper steps only
    LogConnection adapted;                  // the connection in adapted frames
    HodgeSystem graded;
    bool transversal = false;
    std::optional<SemistabilityResult> certificate;     // rank 2
    std::optional<higgs::HeuristicReport> heuristic;    // rank >= 3
    std::size_t iterations = 0;
    std::string note;
};

// Starts from the plain HN filtration and enlarges steps by their
// nabla-images until Griffiths transversal. The graded object is put in
// Birkhoff frames block by block.
SimpsonResult simpson_filtration(const LogConnection& c, std::size_t iter_guard = kDefaultIterGuard,
                                 std::size_t enum_guard = higgs::kDefaultEnumGuard);

// transversality of a chain of generic spans: nabla F_k inside F_{k+1}
bool is_transversal(const LogConnection& c, const std::vector<RMat>& spans);

struct FlowState {
    std::size_t index = 0;
    HodgeSystem system;  // (E_i, theta_i)
    std::vector<int> type;
    int degree = 0;
    std::optional<SemistabilityResult> certificate;  // rank 2
    FrobeniusLift lift;
};

// Throws InputError unless s is a graded nilpotent system of rank <= p.
FlowState initial_state(const HodgeSystem& s, const FrobeniusLift& lift,
                        std::size_t enum_guard = higgs::kDefaultEnumGuard);
// Grades hb by its kernel flag first.
FlowState initial_state(const LogHiggsBundle& hb, const FrobeniusLift& lift,
                        std::size_t enum_guard = higgs::kDefaultEnumGuard);

struct FlowStep {
    LogConnection connection;  // V_i
    std::vector<int> connection_type;
    SimpsonResult simpson;
    FlowState next;            // E_{i+1}
    bool degree_scales = false;  // deg V_i = deg E_{i+1} = p deg E_i
    bool rank_constant = false;
};

// Throws InputError when `lift` differs from the lift the flow started with.
FlowStep flow_step(const FlowState& state, const FrobeniusLift& lift, std::size_t iter_guard = kDefaultIterGuard,
                   std::size_t enum_guard = higgs::kDefaultEnumGuard);

struct FlowRun {
    std::vector<FlowState> states;  // E_0 .. E_n
    std::vector<FlowStep> steps;
};
FlowRun run_flow(const FlowState& initial, std::size_t steps, std::size_t iter_guard = kDefaultIterGuard,
                 std::size_t enum_guard = higgs::kDefaultEnumGuard);

enum class IsoVerdict { isomorphic, not_isomorphic, undecided };
std::string to_string(IsoVerdict v);

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::undecided;
    std::size_t hom_dimension = 0;  // dimension of the space of intertwiners
    std::size_t candidates_tested = 0;
    std::optional<RMat> witness;    // chart-0 matrix in Birkhoff frames
};

// Both sides are moved to Birkhoff frames; the intertwiners form an
// F_p-space that is searched exhaustively for an invertible member.
IsoResult isomorphic(const LogHiggsBundle& a, const LogHiggsBundle& b, std::size_t enum_guard = higgs::kDefaultEnumGuard);

enum class PeriodVerdict { periodic, no_period, undecided };
std::string to_string(PeriodVerdict v);

struct PeriodicityReport {
    PeriodVerdict verdict = PeriodVerdict::undecided;
    std::size_t period = 0;
    std::size_t start = 0;  // E_start = E_{start + period}
    std::string reason;
    std::vector<FlowState> orbit;
    std::vector<FlowStep> steps;
};

PeriodicityReport detect_periodicity(const FlowState& initial, std::size_t max_iter,
                                     std::size_t iter_guard = kDefaultIterGuard,
                                     std::size_t enum_guard = higgs::kDefaultEnumGuard);

// |a_i| <= (r - 1)(#D - 2) C with C = 1
int splitting_bound(std::size_t rank, const LogDivisor& d);
bool within_bound(const std::vector<int>& type, int bound);

// ---- initial data on (P^1, {0, 1, lambda, inf}) ----

LogDivisor four_points(u32 p, u32 lambda);
// O(1) + O(-1) with theta: O(1) -> O(-1) (x) Omega(log D) an isomorphism
HodgeSystem uniformizing_system(u32 p, u32 lambda);
HodgeSystem trivial_system(u32 p, std::size_t rank, const LogDivisor& d);
// O + O with theta strictly lower triangular, random nonzero entry
HodgeSystem random_rank2_system(alg::Rng& rng, u32 p, const LogDivisor& d);

}  // namespace hdr::flow
