#include <gtest/gtest.h>

#include "hdr/alg/parse.hpp"
#include "hdr/alg/random.hpp"
#include "hdr/errors.hpp"
#include "hdr/p1/bundle.hpp"

using namespace hdr::p1;

namespace {

RMat laurent_matrix(unsigned p, const std::vector<std::vector<std::string>>& rows) {
    RMat m(rows.size(), rows[0].size(), RatFun(p));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = hdr::alg::parse_ratfun(rows[i][j], p);
    return m;
}

std::vector<int> type_of(const RMat& t, unsigned p) { return birkhoff_split(make_bundle(p, t)).type; }

}  // namespace

TEST(Birkhoff, Identity) {
    EXPECT_EQ(type_of(RMat::identity(3, RatFun(5)), 5), (std::vector<int>{0, 0, 0}));
}

TEST(Birkhoff, DiagonalIsSorted) {
    EXPECT_EQ(type_of(diagonal_transition(5, {-1, 3, 0}), 5), (std::vector<int>{3, 0, -1}));
}

TEST(Birkhoff, NonsplitExtensionIsTrivial) {
    RMat t = laurent_matrix(5, {{"x", "1"}, {"0", "x^-1"}});
    Splitting s = birkhoff_split(make_bundle(5, t));
    EXPECT_EQ(s.type, (std::vector<int>{0, 0}));
    EXPECT_TRUE(is_polynomial_matrix(s.chart0_change));
    EXPECT_TRUE(is_chart1_polynomial(s.chart1_change));
    auto d = degree_and_slope(make_bundle(5, t));
    EXPECT_EQ(d.degree, 0);
    EXPECT_EQ(d.slope, 0);
}

TEST(Birkhoff, RejectsNonInvertible) {
    RMat t = laurent_matrix(5, {{"x+1", "0"}, {"0", "1"}});
    EXPECT_THROW(make_bundle(5, t), hdr::InputError);
}

TEST(Birkhoff, DegreeAndSlope) {
    auto d = degree_and_slope(direct_sum_of_line_bundles(7, {2, 2, 2}));
    EXPECT_EQ(d.degree, 6);
    EXPECT_EQ(d.slope, 2);
}

TEST(Birkhoff, InvariantUnderFrameChanges) {
    hdr::alg::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned p = trial % 2 ? 3 : 5;
        std::size_t r = 1 + trial % 3;
        std::vector<int> type;
        for (std::size_t i = 0; i < r; ++i) type.push_back(static_cast<int>(hdr::alg::random_int(rng, -2, 2)));
        RMat u = hdr::alg::to_ratfun(hdr::alg::random_unimodular(rng, r, p, 1, 3));
        RMat v = from_chart1_poly(hdr::alg::random_unimodular(rng, r, p, 1, 3));
        RMat t = v * diagonal_transition(p, type) * u;
        std::sort(type.rbegin(), type.rend());
        Splitting s = birkhoff_split(make_bundle(p, t));
        EXPECT_EQ(s.type, type);
        EXPECT_EQ(s.chart1_change * t * s.chart0_change, diagonal_transition(p, s.type));
        EXPECT_TRUE(is_polynomial_matrix(s.chart0_change));
        EXPECT_TRUE(is_chart1_polynomial(s.chart1_change));
    }
}

TEST(Sections, DimensionsMatchBruteForce) {
    EXPECT_EQ(global_sections(direct_sum_of_line_bundles(5, {-1, 2}), 0).cols(), 3u);
    EXPECT_EQ(global_sections(direct_sum_of_line_bundles(5, {-1, 2}), -10).cols(), 0u);
    P1Bundle triv = direct_sum_of_line_bundles(5, {0, 0});
    PMat s = global_sections(triv, 1);
    EXPECT_EQ(s.cols(), 4u);
    EXPECT_EQ(h0_brute_force(triv, 1), 4u);

    P1Bundle ext = make_bundle(5, laurent_matrix(5, {{"x", "1"}, {"0", "x^-1"}}));
    for (int d = -3; d <= 3; ++d) EXPECT_EQ(global_sections(ext, d).cols(), h0_brute_force(ext, d)) << d;

    hdr::alg::Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        RMat u = hdr::alg::to_ratfun(hdr::alg::random_unimodular(rng, 2, 3, 1, 3));
        RMat v = from_chart1_poly(hdr::alg::random_unimodular(rng, 2, 3, 1, 3));
        P1Bundle b = make_bundle(3, v * diagonal_transition(3, {1, -2}) * u);
        for (int d = -2; d <= 2; ++d) EXPECT_EQ(global_sections(b, d).cols(), h0_brute_force(b, d));
    }
}

TEST(Sections, AreRegularInBothCharts) {
    P1Bundle b = make_bundle(5, laurent_matrix(5, {{"x^2", "x+1"}, {"0", "x^-1"}}));
    PMat s = global_sections(b, 1);
    RMat s1 = RatFun::laurent_monomial(5, 1, -1) * b.transition * hdr::alg::to_ratfun(s);
    EXPECT_TRUE(is_chart1_polynomial(s1));
}

TEST(Frobenius, ScalesType) {
    EXPECT_EQ(birkhoff_split(frobenius_pullback(direct_sum_of_line_bundles(5, {1, -1}))).type,
              (std::vector<int>{5, -5}));
    EXPECT_EQ(birkhoff_split(frobenius_pullback(direct_sum_of_line_bundles(3, {0, 0}))).type,
              (std::vector<int>{0, 0}));
    hdr::alg::Rng rng(9);
    RMat u = hdr::alg::to_ratfun(hdr::alg::random_unimodular(rng, 2, 3, 1, 3));
    P1Bundle b = make_bundle(3, diagonal_transition(3, {2, -1}) * u);
    EXPECT_EQ(birkhoff_split(frobenius_pullback(b)).type, (std::vector<int>{6, -3}));
}

TEST(HarderNarasimhan, GroupsByDegree) {
    EXPECT_EQ(hn_filtration_plain(direct_sum_of_line_bundles(5, {1, 1})).size(), 1u);
    auto f = hn_filtration_plain(direct_sum_of_line_bundles(5, {1, -1}));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].sub.rank(), 1u);
    EXPECT_EQ(f[0].sub.degree, 1);
    auto g = hn_filtration_plain(direct_sum_of_line_bundles(5, {2, 0, 2}));
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].sub.rank(), 2u);
    EXPECT_EQ(g[0].sub.degree, 4);
    EXPECT_EQ(g[1].sub.degree, 4);
}

TEST(HarderNarasimhan, AfterFrameChange) {
    hdr::alg::Rng rng(5);
    RMat u = hdr::alg::to_ratfun(hdr::alg::random_unimodular(rng, 3, 5, 1, 4));
    RMat v = from_chart1_poly(hdr::alg::random_unimodular(rng, 3, 5, 1, 4));
    P1Bundle b = make_bundle(5, v * diagonal_transition(5, {3, 0, 0}) * u);
    auto f = hn_filtration_plain(b);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].sub.degree, 3);
    EXPECT_EQ(f[1].sub.degree, 3);
    EXPECT_TRUE(is_polynomial_matrix(f[0].sub.chart0));
    EXPECT_TRUE(is_chart1_polynomial(f[0].sub.chart1));
}

TEST(SubBundle, DegreeOfLine) {
    // e_1 spans the O(-1) of the extension, e_2 a trivial line
    P1Bundle b = make_bundle(5, laurent_matrix(5, {{"x", "1"}, {"0", "x^-1"}}));
    RMat w(2, 1, RatFun(5));
    w(0, 0) = RatFun::constant(5, 1);
    EXPECT_EQ(subbundle_from_span(b, w).degree, -1);
    w(0, 0) = RatFun(5);
    w(1, 0) = RatFun::constant(5, 1);
    EXPECT_EQ(subbundle_from_span(b, w).degree, 0);
}

TEST(MaxSubsheaf, Examples) {
    EXPECT_EQ(max_subsheaf_degree(direct_sum_of_line_bundles(3, {0, 0, 0}), 1), 0);
    EXPECT_EQ(max_subsheaf_degree(std::vector<int>{2, 0, -1}, 2), 2);
    EXPECT_EQ(max_subsheaf_degree(std::vector<int>{1, 1, -3}, 3), -1);
}

TEST(AdaptedFrames, BlockTriangular) {
    hdr::alg::Rng rng(21);
    RMat u = hdr::alg::to_ratfun(hdr::alg::random_unimodular(rng, 3, 5, 1, 4));
    P1Bundle b = make_bundle(5, diagonal_transition(5, {2, 0, -1}) * u);
    auto hn = hn_filtration_plain(b);
    std::vector<RMat> spans;
    for (const auto& s : hn) spans.push_back(s.sub.chart0);
    AdaptedFrames f = adapted_frames(b, spans);
    EXPECT_EQ(f.offsets, (std::vector<std::size_t>{0, 1, 2, 3}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(f.transition(i, j).is_zero());
    EXPECT_EQ(f.transition(0, 0).order_at(0), -2);
    EXPECT_EQ(f.transition(2, 2).order_at(0), 1);
}
