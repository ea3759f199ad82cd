#pragma once

// Local chart model near a boundary component Y = {x = 0} of a surface
// chart Spec F_p[x, y]. Fields are theta_x dx/x + theta_y w_y with
// w_y = dy/y when {y = 0} is also in D, and w_y = dy otherwise.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdr/alg/bipoly.hpp"
#include "hdr/alg/matrix.hpp"
#include "hdr/alg/random.hpp"

namespace hdr::nearby {

using alg::BiPoly;
using alg::Matrix;
using alg::ModMatrix;
using alg::Poly;
using alg::u32;
using BMat = Matrix<BiPoly>;
using PMat = Matrix<Poly>;

enum class Config { x_only, normal_crossing };  // D = {x=0} or {xy=0}
std::string to_string(Config c);
Config parse_config(const std::string& s);

struct LocalLogHiggsModule {
    u32 p = 0;
    Config config = Config::x_only;
    BMat theta_x, theta_y;

    std::size_t rank() const { return theta_x.rows(); }
};

// d + a_x dx/x + a_y w_y
struct LocalLogConnection {
    u32 p = 0;
    Config config = Config::x_only;
    BMat a_x, a_y;

    std::size_t rank() const { return a_x.rows(); }
};

// Operators on a free F_p[y]-module; theta is O-linear (Higgs side).
struct LY0Module {
    u32 p = 0;
    Config config = Config::x_only;
    PMat r, theta;
};

// r is O-linear; the y-direction acts as D_y + b with D_y = d/dy or y d/dy.
struct LYModule {
    u32 p = 0;
    Config config = Config::x_only;
    PMat r, b;
};

// Throws InputError unless theta_x and theta_y are square of equal size and commute.
LocalLogHiggsModule make_local_higgs(u32 p, Config c, BMat theta_x, BMat theta_y);
// Throws InputError unless the curvature vanishes.
LocalLogConnection make_local_connection(u32 p, Config c, BMat a_x, BMat a_y);

// x d/dx, and the derivation dual to w_y
BMat delta_x(const BMat& m, u32 p);
BMat delta_y(const BMat& m, Config c, u32 p);
PMat delta_y(const PMat& m, Config c, u32 p);
BMat curvature(const LocalLogConnection& c);

PMat restrict_x0(const BMat& m);
BMat constant_in_x(const PMat& m);

LY0Module phi_restrict(const LocalLogHiggsModule& m);
LYModule psi_restrict(const LocalLogConnection& c);

struct ResidueEndomorphism {
    PMat r;
    bool o_linear = false;
    bool commutes = false;  // with theta, or with the y-direction operator
};
ResidueEndomorphism residue_endomorphism(const LY0Module& m);
ResidueEndomorphism residue_endomorphism(const LYModule& m);

// theta at y = 0; needs the normal-crossing configuration
ModMatrix residue_along_y0(const LY0Module& m);

struct GradedPiece {
    int weight = 0;
    std::size_t rank = 0;
    PMat theta;  // induced operator
    PMat r;      // induced residue, expected zero
    bool torsion_free = false;
};
struct Upsilon0Result {
    std::vector<GradedPiece> pieces;  // increasing weight, nonzero pieces only
    bool residues_vanish = false;
    bool torsion_free = false;
    bool rank_symmetric = false;
    bool ranks_sum = false;

    bool ok() const { return residues_vanish && torsion_free && rank_symmetric && ranks_sum; }
};
// Graded of the saturated monodromy filtration of r. ContractViolation if r
// is not nilpotent.
Upsilon0Result upsilon0(const LY0Module& m);

// least l such that every product of l + 1 factors theta_x, theta_y vanishes
std::optional<unsigned> joint_nilpotency_level(const BMat& a, const BMat& b);

// Higgs field R dt/t + Theta w_y on Spec F_p[y, t]; t sits in the x slot.
LocalLogHiggsModule z_model_build(const LocalLogHiggsModule& m);
LocalLogConnection z_model_of(const LYModule& m);

// Inverse Cartier with the standard lifts x -> x^p, y -> y^p:
// d + F*theta_x dx/x + F*theta_y zeta(w_y), zeta(dy/y) = dy/y, zeta(dy) = y^{p-1} dy.
LocalLogConnection local_inverse_cartier(const LocalLogHiggsModule& m);

struct CompatibilityReport {
    bool connections_equal = false;
    bool residue_square = false;
    std::vector<std::string> discrepancies;

    bool ok() const { return connections_equal && residue_square; }
};
// Compares C^-1 of the Z-model with the Z-model of the restricted C^-1.
// Throws InputError if theta is not nilpotent of level <= p - 1.
CompatibilityReport z_model_compatibility(const LocalLogHiggsModule& m);

// commuting nilpotent pair built as polynomials in one nilpotent matrix
LocalLogHiggsModule random_local_module(alg::Rng& rng, u32 p, std::size_t rank, Config c);

}  // namespace hdr::nearby
