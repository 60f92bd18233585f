#include <gtest/gtest.h>

#include "oracles/snf.hpp"
#include "topocalc/seifert.hpp"

using namespace topocalc;

namespace {

SeifertBlock block(BaseSurface base, std::vector<Slope> fillings, std::int64_t open,
                   std::vector<std::int64_t> twists = {}) {
    return SeifertBlock{base, std::move(fillings), open, std::move(twists)};
}

Slope s(std::int64_t q, std::int64_t p) { return Slope::normalize(p, q); }

}  // namespace

TEST(Seifert, OrbifoldEulerCharacteristic) {
    EXPECT_EQ(chi_orbifold(block(BaseSurface::disc(), {s(1, 1)}, 0)), Rational(2));
    EXPECT_EQ(chi_orbifold(block(BaseSurface::disc(), {s(2, 5)}, 0)), Rational(6, 5));
    EXPECT_EQ(chi_orbifold(block(BaseSurface::pair_of_pants(), {}, 3)), Rational(-1));
    EXPECT_EQ(chi_orbifold(block(BaseSurface::mobius_band(), {}, 1)), Rational(0));
}

TEST(Seifert, EulerNumber) {
    EXPECT_EQ(euler_number(block(BaseSurface::annulus(), {s(1, 2), s(1, 3)}, 0)), Rational(5, 6));
    EXPECT_EQ(euler_number(block(BaseSurface::pair_of_pants(), {}, 3)), Rational(0));
    const auto open = block(BaseSurface::annulus(), {s(3, 2)}, 1);
    EXPECT_EQ(euler_number(open), Rational(1, 2));
    const auto n = normalize_euler(open);
    EXPECT_EQ(n.fillings[0], s(1, 2));
    EXPECT_EQ(n.section_twists[0], 1);
    EXPECT_EQ(euler_lift(n), euler_lift(open));
    EXPECT_EQ(euler_number(block(BaseSurface::annulus(), {s(-7, 3)}, 1)), Rational(2, 3));
    EXPECT_THROW(euler_number(block(BaseSurface::mobius_band(), {}, 1)), OrientationConventionError);
}

TEST(Seifert, ValidationErrors) {
    EXPECT_THROW(chi_orbifold(block(BaseSurface::annulus(), {s(1, 2)}, 0)), ValidationError);
    EXPECT_THROW(chi_orbifold(block(BaseSurface::disc(), {Slope::infinity()}, 0)), ValidationError);
    EXPECT_THROW(chi_orbifold(block(BaseSurface::annulus(), {}, 2, {1})), ValidationError);
}

TEST(Seifert, SolidTorusFillings) {
    const auto d = block(BaseSurface::disc(), {}, 1);
    const auto meridian = fill(d, {s(0, 1)});
    EXPECT_EQ(meridian.kind, FilledResult::Kind::LensSpace);
    EXPECT_EQ(pi1_order(meridian), 0u);  // filling along the meridian 0/1 gives S^2 x S^1
    for (std::int64_t p = 1; p <= 9; ++p)
        for (std::int64_t q = -9; q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto r = fill(d, {s(q, p)});
            EXPECT_EQ(r.kind, FilledResult::Kind::LensSpace);
            // The order is the distance to the meridian 0/1.
            EXPECT_EQ(pi1_order(r), distance(s(q, p), s(0, 1)));
            EXPECT_EQ(pi1_order(r), oracle::sphere_base_h1({{p, q}}));
        }
}

TEST(Seifert, AnnulusFillingsMatchSmithNormalForm) {
    const auto a = block(BaseSurface::annulus(), {}, 2);
    const auto r = fill(a, {s(1, 2), s(1, 3)});
    EXPECT_EQ(r.kind, FilledResult::Kind::LensSpace);
    EXPECT_EQ(pi1_order(r), 5u);
    EXPECT_EQ(pi1_order(fill(a, {s(0, 1), s(1, 1)})), 1u);
    const auto zero = fill(a, {s(1, 1), s(-1, 1)});
    EXPECT_EQ(pi1_order(zero), 0u);  // S^2 x S^1
    EXPECT_EQ(oracle::sphere_base_h1({{1, 1}, {1, -1}}), 0u);
}

TEST(Seifert, FiberFilling) {
    const auto a = block(BaseSurface::annulus(), {}, 2);
    EXPECT_THROW(fill(a, {Slope::infinity(), s(1, 3)}), ValidationError);
    const auto r = fill(a, {Slope::infinity(), s(1, 3)}, true);
    EXPECT_EQ(r.kind, FilledResult::Kind::LensSpace);
    EXPECT_EQ(pi1_order(r), 3u);
    EXPECT_THROW(fill(a, {Slope::infinity(), Slope::infinity()}, true), ValidationError);
}

TEST(Seifert, SmallBlocksRecognized) {
    EXPECT_EQ(recognize(block(BaseSurface::annulus(), {s(1, 3)}, 1)).kind, FilledResult::Kind::SolidTorus);
    EXPECT_EQ(recognize(block(BaseSurface::annulus(), {}, 2)).kind, FilledResult::Kind::IntervalBundleProduct);
    EXPECT_EQ(recognize(block(BaseSurface::mobius_band(), {}, 1)).kind, FilledResult::Kind::IntervalBundleTwisted);
    EXPECT_EQ(recognize(block(BaseSurface::pair_of_pants(), {s(1, 2), s(1, 2)}, 1)).kind,
              FilledResult::Kind::IntervalBundleTwisted);
    const auto generic = recognize(block(BaseSurface::pair_of_pants(), {}, 3));
    EXPECT_EQ(generic.kind, FilledResult::Kind::GenericSeifert);
    EXPECT_THROW(pi1_order(generic), ValidationError);
    EXPECT_EQ(pi1_order(recognize(block(BaseSurface::annulus(), {s(1, 3)}, 1))), 0u);
}

TEST(Seifert, MobiusFillingHomologyIsFourP) {
    // The filled twisted I-bundle over the Klein bottle is not a lens space;
    // its first homology has order 4|p|.
    for (std::int64_t p = 1; p <= 8; ++p)
        for (std::int64_t q = -8; q <= 8; ++q)
            if (std::gcd(p, q) == 1) {
                EXPECT_EQ(oracle::mobius_base_h1(p, q), static_cast<std::uint64_t>(4 * p));
            }
    const auto r = fill(block(BaseSurface::mobius_band(), {}, 1), {s(1, 2)});
    EXPECT_EQ(r.kind, FilledResult::Kind::GenericSeifert);
}

TEST(Seifert, TwistsShiftFillings) {
    const auto a = block(BaseSurface::annulus(), {}, 2, {1, 0});
    const auto r = fill(a, {s(0, 1), s(1, 1)});
    EXPECT_EQ(r.block.fillings[0], s(1, 1));
    EXPECT_EQ(pi1_order(r), 2u);
}

TEST(Seifert, MeridianOfFilledPants) {
    EXPECT_EQ(meridian_of_filled_pants(2, s(1, 3)), s(-7, 3));
    EXPECT_EQ(meridian_of_filled_pants(0, s(0, 1)), s(0, 1));
    EXPECT_THROW(meridian_of_filled_pants(1, Slope::infinity()), ValidationError);
}

TEST(Seifert, EulerGrowth) {
    const auto one = block(BaseSurface::disc(), {}, 1);
    SlopeSequence seq;
    for (std::int64_t i = 1; i <= 20; ++i) seq.terms.push_back({s(i, 1)});
    seq.limit.push_back(FoliationLimit::slope(Slope::infinity()));
    const auto g = euler_growth(one, seq);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g[i], Rational(static_cast<std::int64_t>(i) + 1));

    const auto half = block(BaseSurface::pair_of_pants(), {s(1, 2)}, 2);
    SlopeSequence two;
    for (std::int64_t i = 1; i <= 10; ++i) two.terms.push_back({s(i, 1), s(1, 3)});
    two.limit = {FoliationLimit::slope(Slope::infinity()), FoliationLimit::slope(s(1, 3))};
    const auto h = euler_growth(half, two);
    EXPECT_EQ(h[2], Rational(1, 2) + 3 + Rational(1, 3));

    SlopeSequence flat;
    for (int i = 0; i < 5; ++i) flat.terms.push_back({s(2, 1)});
    flat.limit.push_back(FoliationLimit::slope(s(2, 1)));
    for (const auto& v : euler_growth(one, flat)) EXPECT_EQ(v, Rational(2));

    two.limit[1] = FoliationLimit::slope(Slope::infinity());
    EXPECT_THROW(euler_growth(half, two), ValidationError);
}
