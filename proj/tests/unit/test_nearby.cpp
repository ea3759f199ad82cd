#include <gtest/gtest.h>

#include "hdr/alg/parse.hpp"
#include "hdr/errors.hpp"
#include "hdr/nearby/nearby.hpp"

using namespace hdr::nearby;

namespace {

BMat bmat(unsigned p, const std::vector<std::vector<std::string>>& rows) {
    BMat m(rows.size(), rows[0].size(), BiPoly(p));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = hdr::alg::parse_bipoly(rows[i][j], p);
    return m;
}

PMat pmat(unsigned p, const std::vector<std::vector<std::string>>& rows) {
    PMat m(rows.size(), rows[0].size(), Poly(p));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = hdr::alg::parse_poly(rows[i][j], p);
    return m;
}

BMat zero2(unsigned p) { return BMat(2, 2, BiPoly(p)); }

}  // namespace

TEST(PhiRestrict, Examples) {
    auto m = make_local_higgs(5, Config::x_only, bmat(5, {{"0", "1"}, {"0", "0"}}), zero2(5));
    LY0Module l = phi_restrict(m);
    EXPECT_EQ(l.r, pmat(5, {{"0", "1"}, {"0", "0"}}));
    EXPECT_TRUE(l.theta.is_zero_matrix());

    auto v = make_local_higgs(5, Config::x_only, bmat(5, {{"0", "x"}, {"0", "0"}}), zero2(5));
    EXPECT_TRUE(phi_restrict(v).r.is_zero_matrix());

    auto c = make_local_higgs(5, Config::normal_crossing, bmat(5, {{"0", "x + y"}, {"0", "0"}}),
                              bmat(5, {{"0", "y^2 + x*y"}, {"0", "0"}}));
    auto rc = residue_endomorphism(phi_restrict(c));
    EXPECT_TRUE(rc.commutes);
    EXPECT_TRUE(rc.o_linear);
    EXPECT_EQ(rc.r, pmat(5, {{"0", "y"}, {"0", "0"}}));

    EXPECT_THROW(make_local_higgs(5, Config::x_only, bmat(5, {{"0", "1"}, {"0", "0"}}), bmat(5, {{"0", "0"}, {"1", "0"}})),
                 hdr::InputError);
}

TEST(PsiRestrict, Examples) {
    BMat n = bmat(5, {{"0", "1"}, {"0", "0"}});
    LYModule a = psi_restrict(make_local_connection(5, Config::x_only, n, zero2(5)));
    EXPECT_EQ(a.r, restrict_x0(n));
    EXPECT_TRUE(a.b.is_zero_matrix());

    LYModule triv = psi_restrict(make_local_connection(5, Config::x_only, zero2(5), zero2(5)));
    EXPECT_TRUE(triv.r.is_zero_matrix());

    LYModule c = psi_restrict(make_local_connection(5, Config::x_only, n, bmat(5, {{"0", "y + x^5"}, {"0", "0"}})));
    EXPECT_EQ(c.b, pmat(5, {{"0", "y"}, {"0", "0"}}));
    auto re = residue_endomorphism(c);
    EXPECT_TRUE(re.commutes);

    EXPECT_THROW(make_local_connection(5, Config::x_only, n, bmat(5, {{"0", "0"}, {"1", "0"}})), hdr::InputError);
}

TEST(ResidueAlongY, Examples) {
    LY0Module m{5, Config::normal_crossing, pmat(5, {{"0", "0"}, {"0", "0"}}), pmat(5, {{"1", "2"}, {"0", "3"}})};
    EXPECT_EQ(residue_along_y0(m), ModMatrix::from_rows(5, {{1, 2}, {0, 3}}));
    m.theta = pmat(5, {{"y", "2*y"}, {"0", "0"}});
    EXPECT_TRUE(residue_along_y0(m).is_zero_matrix());
    m.theta = pmat(5, {{"1 + y", "0"}, {"y", "4"}});
    EXPECT_EQ(residue_along_y0(m), ModMatrix::from_rows(5, {{1, 0}, {0, 4}}));
    m.config = Config::x_only;
    EXPECT_THROW(residue_along_y0(m), hdr::ContractViolation);
}

TEST(Upsilon0, ZeroResidue) {
    LY0Module m{5, Config::x_only, pmat(5, {{"0", "0"}, {"0", "0"}}), pmat(5, {{"y", "1"}, {"0", "y"}})};
    auto u = upsilon0(m);
    ASSERT_EQ(u.pieces.size(), 1u);
    EXPECT_EQ(u.pieces[0].weight, 0);
    EXPECT_EQ(u.pieces[0].theta, m.theta);
    EXPECT_TRUE(u.ok());
}

TEST(Upsilon0, JordanBlock) {
    LY0Module m{5, Config::x_only, pmat(5, {{"0", "1"}, {"0", "0"}}), pmat(5, {{"0", "0"}, {"0", "0"}})};
    auto u = upsilon0(m);
    ASSERT_EQ(u.pieces.size(), 2u);
    EXPECT_EQ(u.pieces[0].weight, -1);
    EXPECT_EQ(u.pieces[1].weight, 1);
    for (const auto& g : u.pieces) {
        EXPECT_TRUE(g.theta.is_zero_matrix());
        EXPECT_TRUE(g.r.is_zero_matrix());
    }
    EXPECT_TRUE(u.ok());
}

TEST(Upsilon0, SaturatedFlag) {
    LY0Module m{5, Config::x_only, pmat(5, {{"0", "y"}, {"0", "0"}}), pmat(5, {{"0", "0"}, {"0", "0"}})};
    auto u = upsilon0(m);
    ASSERT_EQ(u.pieces.size(), 2u);
    EXPECT_TRUE(u.torsion_free);
    EXPECT_TRUE(u.residues_vanish);
    EXPECT_TRUE(u.rank_symmetric);
    EXPECT_THROW(upsilon0(LY0Module{5, Config::x_only, pmat(5, {{"1", "0"}, {"0", "0"}}), pmat(5, {{"0", "0"}, {"0", "0"}})}),
                 hdr::ContractViolation);
}

TEST(ZModel, Build) {
    BMat n = bmat(5, {{"0", "1"}, {"0", "0"}});
    auto z = z_model_build(make_local_higgs(5, Config::x_only, n, zero2(5)));
    EXPECT_EQ(z.theta_x, n);
    EXPECT_TRUE(z.theta_y.is_zero_matrix());
    auto w = z_model_build(make_local_higgs(5, Config::x_only, bmat(5, {{"0", "x"}, {"0", "0"}}), n));
    EXPECT_TRUE(w.theta_x.is_zero_matrix());
    EXPECT_EQ(w.theta_y, n);
}

TEST(ZModel, CompatibilityExamples) {
    BMat n = bmat(5, {{"0", "1"}, {"0", "0"}});
    EXPECT_TRUE(z_model_compatibility(make_local_higgs(5, Config::x_only, n, zero2(5))).ok());
    EXPECT_TRUE(z_model_compatibility(make_local_higgs(5, Config::x_only, zero2(5), zero2(5))).ok());
    BMat n3 = bmat(3, {{"0", "1 + y"}, {"0", "0"}});
    BMat m3 = bmat(3, {{"0", "y^2 + x"}, {"0", "0"}});
    auto rep = z_model_compatibility(make_local_higgs(3, Config::x_only, n3, m3));
    EXPECT_TRUE(rep.ok());
    LocalLogConnection c = local_inverse_cartier(make_local_higgs(3, Config::x_only, n3, m3));
    // the dy direction picks up y^{p-1}
    EXPECT_EQ(c.a_y(0, 1), hdr::alg::parse_bipoly("y^8 + x^3*y^2", 3));
    EXPECT_TRUE(z_model_compatibility(make_local_higgs(3, Config::normal_crossing, n3, m3)).ok());
}

TEST(ZModel, RandomModules) {
    hdr::alg::Rng rng(6);
    for (int trial = 0; trial < 8; ++trial) {
        Config c = trial % 2 ? Config::x_only : Config::normal_crossing;
        auto m = random_local_module(rng, 5, 1 + trial % 3, c);
        EXPECT_TRUE(z_model_compatibility(m).ok());
        auto u = upsilon0(phi_restrict(m));
        EXPECT_TRUE(u.ok());
        EXPECT_TRUE(residue_endomorphism(phi_restrict(m)).commutes);
        EXPECT_TRUE(residue_endomorphism(psi_restrict(local_inverse_cartier(m))).commutes);
    }
}

TEST(JointNilpotency, Levels) {
    BMat n = bmat(5, {{"0", "1"}, {"0", "0"}});
    EXPECT_EQ(joint_nilpotency_level(zero2(5), zero2(5)), 0u);
    EXPECT_EQ(joint_nilpotency_level(n, n), 1u);
    EXPECT_FALSE(joint_nilpotency_level(bmat(5, {{"1", "0"}, {"0", "0"}}), zero2(5)).has_value());
}
