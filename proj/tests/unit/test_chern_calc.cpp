#include <gtest/gtest.h>

#include "hdr/chern/chern.hpp"
#include "hdr/errors.hpp"

using namespace hdr::chern;
using hdr::alg::frac;

namespace {

RingPtr ring_hkd(int n) { return make_ring({"h", "k", "d", "e"}, {1, 1, 2, 3}, n); }

GradedClass cls(const RingPtr& r, const std::string& s) { return parse_class(r, s); }

ChernData data(const RingPtr& r, int rank, std::vector<std::string> cs) {
    std::vector<GradedClass> v;
    for (auto& s : cs) v.push_back(cls(r, s));
    return make_chern_data(r, rank, std::move(v));
}

// Oracle for Delta: r * exp(sum (-1)^{i+1} Delta_i / (i! r^i)) must give back ch.
GradedClass ch_from_deltas(const ChernData& cd, const std::vector<GradedClass>& delta) {
    GradedClass s(cd.ring);
    Rational scale = 1;
    for (int i = 1; i <= cd.truncation(); ++i) {
        scale *= Rational(i * cd.rank);
        s = s + Rational(i % 2 ? 1 : -1) / scale * delta[i - 1];
    }
    return Rational(cd.rank) * exp_series(s);
}

}  // namespace

TEST(ChernCharacter, LineBundleIsExponential) {
    auto r = ring_hkd(4);
    auto cd = data(r, 1, {"h"});
    EXPECT_EQ(chern_character(cd), cls(r, "1 + h + h^2/2 + h^3/6 + h^4/24"));
}

TEST(ChernCharacter, NewtonIdentityExamples) {
    auto r = ring_hkd(2);
    EXPECT_EQ(chern_character(data(r, 2, {"0", "d"})).component(2), cls(r, "-d"));
    EXPECT_EQ(chern_character(data(r, 2, {"h", "0"})).component(2), cls(r, "h^2/2"));
    auto cd = data(r, 3, {"h + k", "d + h*k"});
    EXPECT_EQ(chern_character(cd).component(2), frac(1, 2) * (cd.chern(1).pow(2) - Rational(2) * cd.chern(2)));
}

TEST(HigherDiscriminants, RankTwoSecondIsFourC2) {
    auto r = ring_hkd(3);
    auto delta = higher_discriminants(data(r, 2, {"0", "d"}));
    EXPECT_EQ(delta[0], GradedClass(r));
    EXPECT_EQ(delta[1], cls(r, "4*d"));
}

TEST(HigherDiscriminants, LineClassesHaveNoHigherTerms) {
    auto r = ring_hkd(5);
    auto delta = higher_discriminants(data(r, 1, {"2*h - k"}));
    EXPECT_EQ(delta[0], cls(r, "2*h - k"));
    for (std::size_t i = 1; i < delta.size(); ++i) EXPECT_TRUE(delta[i].is_zero());
}

TEST(HigherDiscriminants, RankThreeThirdDiscriminant) {
    auto r = ring_hkd(3);
    auto cd = data(r, 3, {"0", "0", "e"});
    auto delta = higher_discriminants(cd);
    EXPECT_EQ(ch_from_deltas(cd, delta), chern_character(cd));
    EXPECT_TRUE(delta[2].has_integer_coefficients());
    EXPECT_EQ(delta[2], cls(r, "27*e"));
}

TEST(HigherDiscriminants, ClosedFormForDeltaTwoAndRoundTrip) {
    hdr::alg::Rng rng(3);
    auto r = ring_hkd(4);
    for (int t = 0; t < 30; ++t) {
        int rank = 1 + static_cast<int>(rng() % 6);
        auto cd = random_chern_data(rng, r, rank, false);
        auto delta = higher_discriminants(cd);
        EXPECT_EQ(delta[0], cd.chern(1));
        EXPECT_EQ(delta[1], classical_discriminant(cd));
        EXPECT_EQ(ch_from_deltas(cd, delta), chern_character(cd));
        for (const auto& d : delta) EXPECT_TRUE(d.has_integer_coefficients()) << d.to_string();
    }
}

TEST(EquivalenceDelta, Examples) {
    auto r = ring_hkd(2);
    auto a = check_equivalence_delta(data(r, 2, {"2*h", "h^2"}));
    EXPECT_TRUE(a.b1 && a.b2 && a.b3);
    auto b = check_equivalence_delta(data(r, 2, {"0", "h^2"}));
    EXPECT_FALSE(b.b1 || b.b2 || b.b3);
    auto c = check_equivalence_delta(data(r, 1, {"h"}));
    EXPECT_TRUE(c.b1 && c.b2 && c.b3);
}

TEST(EquivalenceDelta, ConditionsAgreeOnRandomData) {
    hdr::alg::Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        auto r = ring_hkd(1 + static_cast<int>(rng() % 5));
        int rank = 1 + static_cast<int>(rng() % 6);
        auto cd = random_chern_data(rng, r, rank, t % 2 == 0);
        auto rep = check_equivalence_delta(cd);
        EXPECT_EQ(rep.b1, rep.b2);
        EXPECT_EQ(rep.b2, rep.b3);
        if (t % 2 == 0) {
            EXPECT_TRUE(rep.b1);
        }
    }
}

TEST(Twist, Examples) {
    auto r = ring_hkd(3);
    auto cd = data(r, 2, {"0", "d"});
    auto zero = twist(cd, GradedClass(r));
    EXPECT_EQ(zero.c, cd.c);
    auto tw = twist(cd, cls(r, "h"));
    EXPECT_EQ(tw.chern(1), cls(r, "2*h"));
    EXPECT_EQ(tw.chern(2), cls(r, "h^2 + d"));
    EXPECT_EQ(higher_discriminants(tw)[1], cls(r, "4*d"));
    auto line = twist(data(r, 1, {"k"}), cls(r, "h"));
    EXPECT_EQ(line.chern(1), cls(r, "h + k"));
    EXPECT_THROW(twist(cd, cls(r, "d")), hdr::InputError);
}

TEST(Twist, InverseTwistAndInvariance) {
    hdr::alg::Rng rng(23);
    auto r = ring_hkd(5);
    for (int t = 0; t < 20; ++t) {
        auto cd = random_chern_data(rng, r, 1 + static_cast<int>(rng() % 5), false);
        GradedClass l = random_class(rng, r, 1);
        auto tw = twist(cd, l);
        EXPECT_EQ(twist(tw, -l).c, cd.c);
        auto d0 = higher_discriminants(cd), d1 = higher_discriminants(tw);
        EXPECT_EQ(d1[0], d0[0] + Rational(cd.rank) * l);
        for (std::size_t i = 1; i < d0.size(); ++i) EXPECT_EQ(d0[i], d1[i]);
    }
}

TEST(DirectSum, ResidualVanishes) {
    auto r = ring_hkd(4);
    auto a = data(r, 1, {"h"}), b = data(r, 1, {"k"});
    EXPECT_TRUE(direct_sum_discriminant_identity({a, b}).is_zero());
    // the two-line-bundle discriminant is -(a-b)^2
    EXPECT_EQ(classical_discriminant(direct_sum({a, b})), cls(r, "-(h-k)^2"));
    auto c = data(r, 2, {"h", "d"});
    EXPECT_TRUE(direct_sum_discriminant_identity({c, c}).is_zero());
    hdr::alg::Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        std::vector<ChernData> parts;
        for (int i = 0; i < 3; ++i) parts.push_back(random_chern_data(rng, r, 1 + static_cast<int>(rng() % 2), false));
        EXPECT_TRUE(direct_sum_discriminant_identity(parts).is_zero());
    }
}

TEST(BinomialChern, Examples) {
    auto r = ring_hkd(3);
    EXPECT_EQ(binomial_chern(2, 2, cls(r, "2*h"), 2), cls(r, "h^2"));
    EXPECT_TRUE(binomial_chern(3, 2, cls(r, "h"), 3).is_zero());
    EXPECT_EQ(binomial_chern(3, 1, cls(r, "h"), 1), cls(r, "h/3"));
    EXPECT_EQ(binomial(-2, 3), Rational(-4));
}

TEST(BinomialChern, WhitneyProductOfGradedFactors) {
    auto r = ring_hkd(5);
    GradedClass c1 = cls(r, "6*h - 3*k");
    const int rank = 6;
    std::vector<ChernData> parts;
    for (int s : {1, 2, 3}) {
        std::vector<GradedClass> c;
        for (int m = 1; m <= 5; ++m) c.push_back(m <= s ? binomial_chern(rank, s, c1, m) : GradedClass(r));
        parts.push_back(make_chern_data(r, s, c));
    }
    ChernData sum = direct_sum(parts);
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(sum.chern(m), binomial(rank, m) * (frac(1, rank) * c1).pow(m));
}

TEST(GradedClass, PrintingAndTruncation) {
    auto r = ring_hkd(2);
    EXPECT_EQ(cls(r, "h^3 + k"), cls(r, "k"));
    EXPECT_EQ(cls(r, "3/2*h^2 - k + 1").to_string(), "1 - k + 3/2*h^2");
    EXPECT_THROW(cls(r, "h/k"), hdr::InputError);
    EXPECT_THROW(data(r, 2, {"h^2"}), hdr::InputError);
}
