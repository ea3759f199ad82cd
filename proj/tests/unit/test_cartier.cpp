#include <gtest/gtest.h>

#include "hdr/alg/parse.hpp"
#include "hdr/cartier/cartier.hpp"
#include "hdr/errors.hpp"

using namespace hdr::cartier;
namespace p1 = hdr::p1;
namespace higgs = hdr::higgs;
using hdr::alg::Poly;

namespace {

LogDivisor divisor(unsigned p, const std::vector<std::string>& pts) {
    std::vector<higgs::Point> v;
    for (const auto& s : pts) v.push_back(higgs::parse_point(s, p));
    return higgs::make_divisor(p, v);
}

RMat rmat(unsigned p, const std::vector<std::vector<std::string>>& rows) {
    RMat m(rows.size(), rows[0].size(), RatFun(p));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = hdr::alg::parse_ratfun(rows[i][j], p);
    return m;
}

LogHiggsBundle constant_nilpotent(unsigned p) {
    return higgs::make_log_higgs(p1::direct_sum_of_line_bundles(p, {0, 0}), divisor(p, {"0", "inf"}),
                                 rmat(p, {{"0", "1"}, {"0", "0"}}));
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

TEST(FrobeniusLift, TargetLiftsTheDivisorOverZModP2) {
    // x^p + p B_s - s' = (x - s')^p mod p^2, with s' = s^p the Teichmueller lift
    for (long long p : {3LL, 5LL, 7LL}) {
        const long long q = p * p;
        for (long long s = 0; s < p; ++s) {
            long long t = 1;
            for (int i = 0; i < p; ++i) t = mod(t * s, q);
            Poly b = log_condition_target(static_cast<unsigned>(p), static_cast<unsigned>(s));
            std::vector<long long> lhs(p + 1, 0), rhs(p + 1, 0);
            lhs[p] = 1;
            lhs[0] = mod(-t, q);
            for (int k = 0; k < p; ++k) lhs[k] = mod(lhs[k] + p * b.coeff(k), q);
            long long binom = 1;
            for (int k = 0; k <= p; ++k) {
                long long pw = 1;
                for (int i = 0; i < p - k; ++i) pw = mod(pw * -t, q);
                rhs[k] = mod(binom * pw, q);
                binom = binom * (p - k) / (k + 1);
            }
            EXPECT_EQ(lhs, rhs) << "p=" << p << " s=" << s;
        }
    }
}

TEST(FrobeniusLift, DefaultSatisfiesLogCondition) {
    LogDivisor d = divisor(5, {"0", "1", "3", "inf"});
    FrobeniusLift l = default_lift(5, d);
    EXPECT_NO_THROW(check_lift(5, l, d));
    EXPECT_LT(l.chart0.degree(), 15);
    EXPECT_TRUE(default_lift(5, divisor(5, {"0", "inf"})).chart0.is_zero());
    FrobeniusLift bad = l;
    bad.chart0 += Poly::constant(5, 1);
    EXPECT_THROW(check_lift(5, bad, d), hdr::ContractViolation);
    hdr::alg::Rng rng(1);
    EXPECT_NO_THROW(check_lift(5, random_lift(rng, 5, d, 2), d));
}

TEST(Zeta, Examples) {
    EXPECT_EQ(zeta(5, Poly(5)).zeta_log, RatFun::constant(5, 1));
    // c = x, i.e. a = x^{p+1}: zeta(dx/x) = dx/x + dx
    EXPECT_EQ(zeta(5, Poly::monomial(5, 1, 6)).zeta_log, hdr::alg::parse_ratfun("1 + x", 5));
    EXPECT_EQ(zeta(5, Poly::monomial(5, 1, 2)).zeta_dx, hdr::alg::parse_ratfun("x^4 + 2*x", 5));
}

TEST(InverseCartier, ConstantNilpotentField) {
    LogHiggsBundle hb = constant_nilpotent(5);
    CartierResult r = inverse_cartier(hb);
    EXPECT_EQ(r.connection.bundle.transition, RMat::identity(2, RatFun(5)));
    EXPECT_EQ(r.connection.a0, hb.theta0);
    EXPECT_TRUE(r.tau.is_zero_matrix());
}

TEST(InverseCartier, ZeroFieldGivesCanonicalConnection) {
    LogHiggsBundle hb = higgs::make_log_higgs(p1::direct_sum_of_line_bundles(3, {1, -2}), divisor(3, {"0", "1", "inf"}),
                                              RMat(2, 2, RatFun(3)));
    CartierResult r = inverse_cartier(hb);
    EXPECT_TRUE(r.connection.a0.is_zero_matrix());
    EXPECT_EQ(p1::birkhoff_split(r.connection.bundle).type, (std::vector<int>{3, -6}));
}

TEST(InverseCartier, UniformizingField) {
    RMat theta = rmat(5, {{"0", "0"}, {"1/((x-1)*(x-2))", "0"}});
    LogHiggsBundle hb = higgs::make_log_higgs(p1::direct_sum_of_line_bundles(5, {1, -1}),
                                              divisor(5, {"0", "1", "2", "inf"}), theta);
    CartierResult r = inverse_cartier(hb);
    EXPECT_EQ(p1::degree_and_slope(r.connection.bundle).degree, 0);
    for (const auto& pt : hb.divisor.points) EXPECT_EQ(residue(r.connection, pt), residue(hb, pt)) << pt.to_string();
    PCurvature pc = p_curvature(r.connection);
    EXPECT_EQ(pc.psi0, expected_p_curvature(hb));
    EXPECT_TRUE(pc.in_range);
    EXPECT_TRUE(higgs::residue_trace_sum(r.connection).holds);
}

TEST(InverseCartier, RejectsLevelAndRank) {
    LogHiggsBundle hb = higgs::make_log_higgs(p1::direct_sum_of_line_bundles(3, {0, 0, 0, 0}), divisor(3, {"0", "inf"}),
                                              rmat(3, {{"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"},
                                                       {"0", "0", "0", "0"}}));
    EXPECT_THROW(inverse_cartier(hb), hdr::InputError);
    LogHiggsBundle ss = higgs::make_log_higgs(p1::direct_sum_of_line_bundles(3, {0, 0}), divisor(3, {"0", "inf"}),
                                              rmat(3, {{"1", "0"}, {"0", "0"}}));
    EXPECT_THROW(inverse_cartier(ss), hdr::InputError);
}

TEST(PCurvature, Examples) {
    auto triv = higgs::make_log_connection(p1::direct_sum_of_line_bundles(3, {0, 0}), divisor(3, {"0", "inf"}),
                                           RMat(2, 2, RatFun(3)));
    EXPECT_TRUE(p_curvature(triv).psi0.is_zero_matrix());

    RMat n = rmat(3, {{"0", "1"}, {"0", "0"}});
    auto c = higgs::make_log_connection(p1::direct_sum_of_line_bundles(3, {0, 0}), divisor(3, {"0", "inf"}), n);
    PCurvature pc = p_curvature(c);
    EXPECT_EQ(pc.psi0, rmat(3, {{"0", "2"}, {"0", "0"}}));
    EXPECT_EQ(pc.level, 1u);

    // constant semisimple residues have zero p-curvature but leave the range
    auto diag = higgs::make_log_connection(p1::direct_sum_of_line_bundles(3, {0, 0}), divisor(3, {"0", "inf"}),
                                           rmat(3, {{"1", "0"}, {"0", "2"}}));
    PCurvature pd = p_curvature(diag);
    EXPECT_TRUE(pd.psi0.is_zero_matrix());
    EXPECT_FALSE(pd.residues_nilpotent);
    EXPECT_FALSE(pd.in_range);

    // eigenvalues outside F_3: psi = A^3 - A = A is not nilpotent
    RMat irr = rmat(3, {{"0", "1"}, {"2", "0"}});
    auto lin = higgs::make_log_connection(p1::direct_sum_of_line_bundles(3, {0, 0}), divisor(3, {"0", "inf"}), irr);
    PCurvature pl = p_curvature(lin);
    EXPECT_EQ(pl.psi0, irr);
    EXPECT_FALSE(pl.level.has_value());
}

TEST(GlueChange, Examples) {
    LogHiggsBundle hb = constant_nilpotent(5);
    FrobeniusLift std_lift = default_lift(5, hb.divisor);
    GlueChange same = glue_change_of_lift(std_lift, std_lift, hb);
    EXPECT_TRUE(same.tau0.is_zero_matrix());
    EXPECT_EQ(same.g0, RMat::identity(2, RatFun(5)));

    FrobeniusLift c_x = std_lift;
    c_x.chart0 = Poly::monomial(5, 1, 6);
    GlueChange g = glue_change_of_lift(std_lift, c_x, hb);
    EXPECT_EQ(g.tau0, rmat(5, {{"0", "x"}, {"0", "0"}}));
    CartierResult r1 = inverse_cartier(hb, std_lift), r2 = inverse_cartier(hb, c_x);
    EXPECT_FALSE(r1.connection.a0 == r2.connection.a0);
    EXPECT_TRUE(intertwines(g, r1.connection, r2.connection));

    LogHiggsBundle zero = higgs::make_log_higgs(hb.bundle, hb.divisor, RMat(2, 2, RatFun(5)));
    EXPECT_EQ(glue_change_of_lift(std_lift, c_x, zero).g0, RMat::identity(2, RatFun(5)));
}

TEST(GlueChange, RandomLiftPairs) {
    hdr::alg::Rng rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        unsigned p = trial % 2 ? 3 : 5;
        LogDivisor d = higgs::random_divisor(rng, p, 4);
        LogHiggsBundle hb = higgs::random_nilpotent_higgs(rng, p, {1, 0, -1}, d, 2);
        FrobeniusLift l1 = random_lift(rng, p, d, 1), l2 = random_lift(rng, p, d, 1);
        CartierResult r1 = inverse_cartier(hb, l1), r2 = inverse_cartier(hb, l2);
        EXPECT_TRUE(intertwines(glue_change_of_lift(l1, l2, hb), r1.connection, r2.connection));
        EXPECT_EQ(p_curvature(r1.connection).psi0, expected_p_curvature(hb));
        for (const auto& pt : d.points) EXPECT_EQ(residue(r1.connection, pt), residue(hb, pt));
        EXPECT_EQ(p1::det_exponent(r1.connection.bundle), static_cast<int>(p) * p1::det_exponent(hb.bundle));
    }
}

TEST(Functoriality, Examples) {
    LogHiggsBundle hb = constant_nilpotent(5);
    EXPECT_TRUE(check_functoriality({1, 1}, hb).equal);
    EXPECT_TRUE(check_functoriality({2, 1}, hb).equal);
    LogConnection up = inverse_cartier(pull_back(hb, MonomialMap{2, 1})).connection;
    EXPECT_EQ(up.a0, rmat(5, {{"0", "2"}, {"0", "0"}}));
    LogHiggsBundle zero = higgs::make_log_higgs(p1::direct_sum_of_line_bundles(5, {1, 0}), hb.divisor,
                                                RMat(2, 2, RatFun(5)));
    EXPECT_TRUE(check_functoriality({3, 2}, zero).equal);
    FrobeniusLift std_lift = default_lift(5, hb.divisor), bad = std_lift;
    bad.chart0 = Poly::monomial(5, 1, 5);
    EXPECT_THROW(check_functoriality({2, 1}, hb, bad, std_lift), hdr::ContractViolation);
    LogHiggsBundle off = higgs::make_log_higgs(hb.bundle, divisor(5, {"0", "1", "inf"}), RMat(2, 2, RatFun(5)));
    EXPECT_THROW(check_functoriality({2, 1}, off), hdr::ContractViolation);
}
