#include "hdr/nearby/nearby.hpp"

#include <algorithm>

#include "hdr/alg/linalg.hpp"
#include "hdr/alg/snf.hpp"
#include "hdr/errors.hpp"
#include "hdr/monodromy/monodromy.hpp"

namespace hdr::nearby {

namespace {

BMat commutator(const BMat& a, const BMat& b) { return a * b - b * a; }
PMat commutator(const PMat& a, const PMat& b) { return a * b - b * a; }

BMat scaled(const BMat& m, const BiPoly& f) { return m.map([&](const BiPoly& e) { return f * e; }); }

BiPoly random_bipoly(alg::Rng& rng, u32 p, int dx, int dy) {
    BiPoly f(p);
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j) f = f + BiPoly::monomial(p, alg::random_residue(rng, p), i, j);
    return f;
}

BMat lift(const ModMatrix& m) {
    BMat out(m.rows(), m.cols(), BiPoly(m.prime()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = BiPoly::constant(m.prime(), m.at(i, j));
    return out;
}

void require_square_pair(const BMat& a, const BMat& b, const char* what) {
    if (a.rows() == 0 || a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.cols())
        throw InputError(std::string(what) + " matrices must be square of the same size");
}

}  // namespace

std::string to_string(Config c) { return c == Config::x_only ? "x" : "xy"; }

Config parse_config(const std::string& s) {
    if (s == "x" || s == "x=0") return Config::x_only;
    if (s == "xy" || s == "xy=0") return Config::normal_crossing;
    throw InputError("unknown divisor configuration '" + s + "' (expected \"x\" or \"xy\")");
}

LocalLogHiggsModule make_local_higgs(u32 p, Config c, BMat theta_x, BMat theta_y) {
    require_square_pair(theta_x, theta_y, "theta");
    if (!commutator(theta_x, theta_y).is_zero_matrix()) throw InputError("theta_x and theta_y do not commute");
    return {p, c, std::move(theta_x), std::move(theta_y)};
}

BMat delta_x(const BMat& m, u32 p) {
    BiPoly x = BiPoly::monomial(p, 1, 1, 0);
    return m.map([&](const BiPoly& f) { return x * f.d_dx(); });
}

BMat delta_y(const BMat& m, Config c, u32 p) {
    BiPoly y = BiPoly::monomial(p, 1, 0, 1);
    if (c == Config::x_only) return m.map([](const BiPoly& f) { return f.d_dy(); });
    return m.map([&](const BiPoly& f) { return y * f.d_dy(); });
}

PMat delta_y(const PMat& m, Config c, u32 p) {
    Poly y = Poly::x(p);
    if (c == Config::x_only) return m.map([](const Poly& f) { return f.derivative(); });
    return m.map([&](const Poly& f) { return y * f.derivative(); });
}

BMat curvature(const LocalLogConnection& c) {
    return delta_x(c.a_y, c.p) - delta_y(c.a_x, c.config, c.p) + commutator(c.a_x, c.a_y);
}

LocalLogConnection make_local_connection(u32 p, Config c, BMat a_x, BMat a_y) {
    require_square_pair(a_x, a_y, "connection");
    LocalLogConnection out{p, c, std::move(a_x), std::move(a_y)};
    if (!curvature(out).is_zero_matrix()) throw InputError("connection is not integrable");
    return out;
}

PMat restrict_x0(const BMat& m) {
    return m.map([](const BiPoly& f) { return f.at_x0(); });
}

BMat constant_in_x(const PMat& m) {
    return m.map([](const Poly& f) { return BiPoly::from_y(f); });
}

LY0Module phi_restrict(const LocalLogHiggsModule& m) {
    return {m.p, m.config, restrict_x0(m.theta_x), restrict_x0(m.theta_y)};
}

LYModule psi_restrict(const LocalLogConnection& c) { return {c.p, c.config, restrict_x0(c.a_x), restrict_x0(c.a_y)}; }

namespace {

// R(f e_i) = f R(e_i) for f in {1, y, y^2}
bool o_linear(const PMat& r, u32 p) {
    for (int k = 0; k < 3; ++k) {
        Poly f = Poly::monomial(p, 1, k);
        for (std::size_t i = 0; i < r.cols(); ++i) {
            PMat v(r.cols(), 1, Poly(p));
            v(i, 0) = f;
            PMat lhs = r * v;
            for (std::size_t row = 0; row < r.rows(); ++row)
                if (!(lhs(row, 0) == f * r(row, i))) return false;
        }
    }
    return true;
}

}  // namespace

ResidueEndomorphism residue_endomorphism(const LY0Module& m) {
    return {m.r, o_linear(m.r, m.p), commutator(m.r, m.theta).is_zero_matrix()};
}

ResidueEndomorphism residue_endomorphism(const LYModule& m) {
    // [R, D_y + B] = -D_y(R) + [R, B]
    PMat c = commutator(m.r, m.b) - delta_y(m.r, m.config, m.p);
    return {m.r, o_linear(m.r, m.p), c.is_zero_matrix()};
}

ModMatrix residue_along_y0(const LY0Module& m) {
    if (m.config != Config::normal_crossing)
        throw ContractViolation("residue along {y=0} needs the divisor configuration xy");
    return alg::evaluate(m.theta, 0);
}

Upsilon0Result upsilon0(const LY0Module& m) {
    if (!alg::is_nilpotent(m.r)) throw ContractViolation("upsilon0 needs a nilpotent residue");
    using Ops = monodromy::SubspaceOps<PMat>;
    auto f = monodromy::monodromy_filtration(m.r);
    auto frame = monodromy::adapted_frame(m.r, f);
    PMat th = alg::module_coordinates(frame.basis, m.theta * frame.basis);

    Upsilon0Result out;
    out.residues_vanish = out.torsion_free = out.rank_symmetric = true;
    std::size_t total = 0;
    for (int w = f.lo; w <= f.hi; ++w) {
        if (f.gr_rank(w) != f.gr_rank(-w)) out.rank_symmetric = false;
        if (!frame.has(w) || frame.rank(w) == 0) continue;
        GradedPiece g;
        g.weight = w;
        g.rank = frame.rank(w);
        g.theta = frame.block(th, w, w);
        g.r = frame.block(frame.n_adapted, w, w);
        PMat below = w > f.lo ? f.at(w - 1) : m.r.make(m.r.rows(), 0);
        g.torsion_free = Ops::quotient_torsion_free(below, f.at(w));
        if (!g.r.is_zero_matrix()) out.residues_vanish = false;
        if (!g.torsion_free) out.torsion_free = false;
        total += g.rank;
        out.pieces.push_back(std::move(g));
    }
    out.ranks_sum = total == m.r.rows();
    return out;
}

std::optional<unsigned> joint_nilpotency_level(const BMat& a, const BMat& b) {
    const std::size_t r = a.rows();
    // words of length k, as the list of all products
    std::vector<BMat> words{BMat::identity(r, a.zero())};
    for (unsigned k = 0; k <= 2 * r; ++k) {
        std::vector<BMat> next;
        bool all_zero = true;
        for (const BMat& w : words)
            for (const BMat* f : {&a, &b}) {
                BMat v = w * *f;
                if (v.is_zero_matrix()) continue;
                all_zero = false;
                if (std::none_of(next.begin(), next.end(), [&](const BMat& u) { return u == v; })) next.push_back(v);
            }
        if (all_zero) return k;
        words = std::move(next);
    }
    return std::nullopt;
}

LocalLogHiggsModule z_model_build(const LocalLogHiggsModule& m) {
    LY0Module l = phi_restrict(m);
    return make_local_higgs(m.p, m.config, constant_in_x(l.r), constant_in_x(l.theta));
}

LocalLogConnection z_model_of(const LYModule& m) {
    return make_local_connection(m.p, m.config, constant_in_x(m.r), constant_in_x(m.b));
}

LocalLogConnection local_inverse_cartier(const LocalLogHiggsModule& m) {
    const u32 p = m.p;
    auto frob = [](const BMat& a) { return a.map([](const BiPoly& f) { return f.frobenius(); }); };
    BiPoly z = m.config == Config::x_only ? BiPoly::monomial(p, 1, 0, static_cast<int>(p) - 1) : BiPoly::constant(p, 1);
    return make_local_connection(p, m.config, frob(m.theta_x), scaled(frob(m.theta_y), z));
}

CompatibilityReport z_model_compatibility(const LocalLogHiggsModule& m) {
    auto level = joint_nilpotency_level(m.theta_x, m.theta_y);
    if (!level) throw InputError("theta is not nilpotent");
    if (*level > m.p - 1) throw InputError("theta has nilpotency level " + std::to_string(*level) + " > p - 1");

    LocalLogConnection via_z = local_inverse_cartier(z_model_build(m));
    LYModule restricted = psi_restrict(local_inverse_cartier(m));
    LocalLogConnection via_y = z_model_of(restricted);

    CompatibilityReport rep;
    if (!(via_z.a_x == via_y.a_x)) rep.discrepancies.push_back("dt/t coefficient");
    if (!(via_z.a_y == via_y.a_y)) rep.discrepancies.push_back("w_y coefficient");
    rep.connections_equal = rep.discrepancies.empty();

    // C^-1(pi^* Res_Y theta) against pi^* Res_Y of C^-1(theta)
    PMat res_theta = phi_restrict(m).r;
    PMat transformed = res_theta.map([&](const Poly& f) { return f.substitute_power(static_cast<int>(m.p)); });
    rep.residue_square = transformed == restricted.r && restrict_x0(via_z.a_x) == restricted.r;
    if (!rep.residue_square) rep.discrepancies.push_back("residue square");
    return rep;
}

LocalLogHiggsModule random_local_module(alg::Rng& rng, u32 p, std::size_t rank, Config c) {
    ModMatrix n(rank, rank, p);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) n.at(i, j) = alg::random_residue(rng, p);
    ModMatrix g;
    do {
        g = alg::random_mod_matrix(rng, rank, rank, p);
    } while (alg::rank(g) != rank);
    BMat nb = lift(g * n * *alg::inverse_matrix(g));
    BMat n2 = nb * nb;
    BMat tx = scaled(nb, random_bipoly(rng, p, 1, 1)) + scaled(n2, random_bipoly(rng, p, 1, 1));
    BMat ty = scaled(nb, random_bipoly(rng, p, 1, 1)) + scaled(n2, random_bipoly(rng, p, 1, 1));
    return make_local_higgs(p, c, tx, ty);
}

}  // namespace hdr::nearby
