#include <gtest/gtest.h>

#include <random>

#include "topocalc/slope.hpp"

using namespace topocalc;

TEST(Slope, NormalizeReducesAndFixesSign) {
    EXPECT_EQ(Slope::normalize(2, 4), Slope::normalize(1, 2));
    EXPECT_EQ(Slope::normalize(2, 4).q(), 2);
    const Slope s = Slope::normalize(-1, 3);
    EXPECT_EQ(s.p(), 1);
    EXPECT_EQ(s.q(), -3);
    const Slope inf = Slope::normalize(0, -7);
    EXPECT_EQ(inf.p(), 0);
    EXPECT_EQ(inf.q(), 1);
    EXPECT_THROW(Slope::normalize(0, 0), ValidationError);
}

TEST(Slope, Distance) {
    EXPECT_EQ(distance(Slope::infinity(), Slope::normalize(7, 3)), 7u);
    EXPECT_EQ(distance(Slope::normalize(5, 3), Slope::normalize(5, 3)), 0u);
    EXPECT_EQ(distance(parse_slope("1/2"), parse_slope("3/5")), 1u);
}

TEST(Slope, ParseAndPrint) {
    EXPECT_EQ(parse_slope("inf"), Slope::infinity());
    EXPECT_EQ(parse_slope("-6/4"), Slope::normalize(2, -3));
    EXPECT_EQ(parse_slope("5"), Slope::normalize(1, 5));
    EXPECT_EQ(to_string(Slope::normalize(3, -2)), "-2/3");
    EXPECT_EQ(to_string(Slope::infinity()), "inf");
    EXPECT_THROW(parse_slope("1/x"), ValidationError);
    EXPECT_THROW(parse_slope("0/0"), ValidationError);
}

TEST(Slope, MatrixActionPreservesDistance) {
    std::mt19937_64 rng(7);
    const Matrix2 gens[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}};
    for (int trial = 0; trial < 500; ++trial) {
        Matrix2 m;
        for (int i = 0; i < 4; ++i) m = m * gens[rng() % 4];
        const Slope a = Slope::normalize(1 + rng() % 9, static_cast<std::int64_t>(rng() % 19) - 9);
        const Slope b = Slope::normalize(static_cast<std::int64_t>(rng() % 9), 1 + rng() % 9);
        EXPECT_EQ(distance(m.apply(a), m.apply(b)), distance(a, b));
        EXPECT_EQ(m.inverse().apply(m.apply(a)), a);
    }
    EXPECT_THROW((Matrix2{2, 0, 0, 1}.inverse()), ValidationError);
}

TEST(AnnulusTwist, Examples) {
    const SlopeVector v{Slope::normalize(1, 3), Slope::normalize(1, 5)};
    EXPECT_EQ(annulus_twist(v, 0, 1, 1), (SlopeVector{Slope::normalize(1, 4), Slope::normalize(1, 4)}));
    const SlopeVector w{Slope::normalize(2, 1), Slope::normalize(1, 0)};
    EXPECT_EQ(annulus_twist(w, 0, 1, -1), (SlopeVector{Slope::normalize(2, -1), Slope::normalize(1, 1)}));
    EXPECT_EQ(annulus_twist(annulus_twist(w, 0, 1, 1), 0, 1, -1), w);
}

TEST(AnnulusTwist, Rejections) {
    const SlopeVector v{Slope::normalize(1, 3), Slope::infinity()};
    EXPECT_THROW(annulus_twist(v, 0, 0, 1), ValidationError);
    EXPECT_THROW(annulus_twist(v, 0, 2, 1), ValidationError);
    EXPECT_THROW(annulus_twist(v, 0, 1, 2), ValidationError);
    EXPECT_THROW(annulus_twist(v, 0, 1, 1), ValidationError);
}

namespace {

SlopeSequence one_coordinate(std::int64_t n, auto term, FoliationLimit limit) {
    SlopeSequence s;
    for (std::int64_t i = 1; i <= n; ++i) s.terms.push_back({term(i)});
    s.limit.push_back(limit);
    return s;
}

}  // namespace

TEST(Divergence, ReciprocalAgainstConstant) {
    const auto s = one_coordinate(50, [](std::int64_t i) { return Slope::normalize(i, 1); },
                                  FoliationLimit::slope(Slope::normalize(1, 0)));
    const auto t = one_coordinate(50, [](std::int64_t) { return Slope::normalize(1, 1); },
                                  FoliationLimit::slope(Slope::normalize(1, 1)));
    const auto d = divergence_profile(s, t, 0);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], i);  // i - 1 for 1-based i
}

TEST(Divergence, IntegersAgainstZero) {
    const auto s = one_coordinate(30, [](std::int64_t i) { return Slope::normalize(1, i); },
                                  FoliationLimit::slope(Slope::infinity()));
    const auto t = one_coordinate(30, [](std::int64_t) { return Slope::normalize(1, 0); },
                                  FoliationLimit::slope(Slope::normalize(1, 0)));
    const auto d = divergence_profile(s, t, 0);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], i + 1);
}

TEST(Divergence, RejectsViolatedHypotheses) {
    const auto c = one_coordinate(5, [](std::int64_t) { return Slope::normalize(1, 2); },
                                  FoliationLimit::slope(Slope::normalize(1, 2)));
    EXPECT_THROW(divergence_profile(c, c, 0), ValidationError);
    const auto s = one_coordinate(5, [](std::int64_t i) { return Slope::normalize(1, i); },
                                  FoliationLimit::slope(Slope::infinity()));
    EXPECT_THROW(divergence_profile(s, s, 0), ValidationError);
    EXPECT_THROW(divergence_profile(s, c, 3), ValidationError);
}

TEST(Divergence, EventuallyExceedsBound) {
    // |p_i| -> infinity against a family staying away from the limit.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 5);
        const auto s = one_coordinate(400, [&](std::int64_t i) { return Slope::normalize(i, 1); },
                                      FoliationLimit::slope(Slope::normalize(1, 0)));
        const auto t = one_coordinate(400, [&](std::int64_t i) { return Slope::normalize(1, k + i % 3); },
                                      FoliationLimit::interval(Rational(k), Rational(k + 3)));
        const auto d = divergence_profile(s, t, 0);
        EXPECT_GE(d.back(), 100u);
    }
}

TEST(FoliationLimit, Validation) {
    EXPECT_THROW(FoliationLimit::quadratic({0, 1, 1, 4}), ValidationError);
    EXPECT_THROW(FoliationLimit::interval(Rational(1), Rational(1)), ValidationError);
    const auto q = FoliationLimit::quadratic({1, 1, 2, 5});
    EXPECT_FALSE(q.is_rational());
    EXPECT_FALSE(q.equals(Slope::normalize(1, 1)));
}
