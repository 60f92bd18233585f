#include <gtest/gtest.h>

#include <random>

#include "oracles/graph_gen.hpp"
#include "oracles/twist_search.hpp"
#include "topocalc/decomposition.hpp"

using namespace topocalc;

namespace {

SeifertBlock pants() { return SeifertBlock{BaseSurface::pair_of_pants(), {}, 3, {}}; }

// Two copies of P x S^1 glued along all three tori by the same matrix.
DecompGraph two_pants(const Matrix2& m) {
    DecompGraph g;
    g.blocks = {pants(), pants()};
    for (std::size_t t = 0; t < 3; ++t) g.edges.push_back({GluingEdge::Surface::Torus, {0, t}, {1, t}, m});
    return g;
}

SeifertBlock seifert_with(std::int64_t open) {
    // Disc-like base with two cone points and `open` tori: chi < 0.
    return SeifertBlock{{0, true, open + 2}, {Slope::normalize(2, 1), Slope::normalize(3, 1)}, open, {}};
}

DecompGraph single_edge(const Matrix2& m) {
    DecompGraph g;
    g.blocks = {seifert_with(1), seifert_with(1)};
    g.edges.push_back({GluingEdge::Surface::Torus, {0, 0}, {1, 0}, m});
    return g;
}

}  // namespace

TEST(Geometric, SwapGluingIsGeometric) {
    EXPECT_TRUE(validate_geometric(two_pants({0, 1, 1, 0})).geometric);
    const auto bad = validate_geometric(two_pants({1, 0, 0, 1}));
    EXPECT_FALSE(bad.geometric);
    EXPECT_EQ(bad.violations.size(), 3u);
}

TEST(Geometric, PositiveChiBlockFlagged) {
    DecompGraph g;
    g.blocks = {pants(), SeifertBlock{BaseSurface::disc(), {}, 1, {}}, pants()};
    g.edges = {{GluingEdge::Surface::Torus, {0, 0}, {1, 0}, {0, 1, 1, 0}},
               {GluingEdge::Surface::Torus, {0, 1}, {2, 0}, {0, 1, 1, 0}},
               {GluingEdge::Surface::Torus, {0, 2}, {2, 1}, {0, 1, 1, 0}}};
    g.free_boundary = {{2, 2}};
    const auto rep = validate_geometric(g);
    EXPECT_FALSE(rep.geometric);
    ASSERT_FALSE(rep.violations.empty());
    EXPECT_NE(rep.violations[0].find("chi"), std::string::npos);
}

TEST(Geometric, StructuralErrors) {
    auto g = two_pants({0, 1, 1, 0});
    g.edges.pop_back();
    EXPECT_THROW(g.validate(), ValidationError);
    auto h = two_pants({2, 1, 1, 1});
    EXPECT_NO_THROW(h.validate());
    h.edges[0].matrix = {2, 0, 0, 1};
    EXPECT_THROW(h.validate(), ValidationError);
}

TEST(Volume, Examples) {
    EXPECT_DOUBLE_EQ(volume(two_pants({0, 1, 1, 0})), 2.0);
    DecompGraph g;
    g.blocks = {HyperbolicBlock{2.5, {{Slope::infinity(), Slope::normalize(1, 0)}}},
                SeifertBlock{{0, true, 3}, {}, 3, {}}};
    g.edges = {{GluingEdge::Surface::Torus, {0, 0}, {1, 0}, {0, 1, 1, 0}}};
    g.free_boundary = {{1, 1}, {1, 2}};
    EXPECT_DOUBLE_EQ(volume(g), 3.5);
    DecompGraph single;
    single.blocks = {HyperbolicBlock{1.25, {}}};
    EXPECT_DOUBLE_EQ(volume(single), 1.25);
    EXPECT_THROW(volume(two_pants({1, 0, 0, 1})), ValidationError);
}

TEST(PreferredSlopes, SeifertAndHyperbolic) {
    auto g = two_pants({0, 1, 1, 0});
    EXPECT_EQ(preferred_slopes(g, 0, 1), (std::vector<Slope>{Slope::infinity(), Slope::normalize(1, 0)}));
    std::get<SeifertBlock>(g.blocks[0]).section_twists = {0, 4, 0};
    EXPECT_EQ(preferred_slopes(g, 0, 1), (std::vector<Slope>{Slope::infinity(), Slope::normalize(1, 4)}));
    DecompGraph h;
    const std::vector<Slope> set{Slope::normalize(1, 2), Slope::normalize(3, 1)};
    h.blocks = {HyperbolicBlock{1.0, {set}}};
    h.free_boundary = {{0, 0}};
    EXPECT_EQ(preferred_slopes(h, 0, 0), set);
}

TEST(DeltaS, BruteForceExamples) {
    EXPECT_EQ(delta_S(two_pants({1, 0, 0, 1}), 0), 1u);
    EXPECT_EQ(delta_S(two_pants({0, 1, 1, 0}), 0), 1u);
    for (std::int64_t n = 1; n <= 20; ++n) {
        // [[1,0],[n,1]] sends 0/1 = (1,0) to (1,n): distance n to 0/1.
        EXPECT_EQ(delta_S(two_pants({1, 0, n, 1}), 0), static_cast<std::uint64_t>(n));
        EXPECT_EQ(delta_S(two_pants({1, 0, -n, 1}), 0), static_cast<std::uint64_t>(n));
    }
}

TEST(EulerInvariant, SymmetricGraphZeroTwistOptimal) {
    const auto g = two_pants({0, 1, 1, 0});
    EXPECT_EQ(euler_invariant(g), delta_S(g, 0));
    EXPECT_EQ(euler_invariant(g), oracle::exhaustive_euler(g, 2));
}

TEST(EulerInvariant, HyperbolicOnlyIsConstant) {
    DecompGraph g;
    g.blocks = {HyperbolicBlock{1.0, {{Slope::normalize(1, 0), Slope::normalize(1, 5)}}},
                HyperbolicBlock{1.0, {{Slope::infinity(), Slope::normalize(2, 1)}}}};
    g.edges = {{GluingEdge::Surface::Torus, {0, 0}, {1, 0}, {1, 1, 0, 1}}};
    EXPECT_EQ(euler_invariant(g), delta_S(g, 0));
}

TEST(EulerInvariant, ShearedSingleEdgeMatchesExhaustive) {
    for (std::int64_t n = 1; n <= 10; ++n) {
        // Matrix [[n,1],[-1,0]] keeps the fibers apart for every n.
        const auto g = single_edge({n, 1, -1, 0});
        ASSERT_TRUE(validate_geometric(g).geometric);
        const auto d0 = delta_S(g, 0);
        EXPECT_EQ(euler_invariant(g), oracle::exhaustive_euler(g, 2 * static_cast<std::int64_t>(d0)));
    }
    // Both blocks closed: twists must vanish, so the value is delta_S.
    const auto g = single_edge({1, 0, 5, 1});
    EXPECT_FALSE(validate_geometric(g).geometric);
}

TEST(EulerInvariant, FreeBoundaryAllowsTwisting) {
    DecompGraph g;
    g.blocks = {seifert_with(2), seifert_with(1)};
    g.edges = {{GluingEdge::Surface::Torus, {0, 0}, {1, 0}, {3, 1, -1, 0}}};
    g.free_boundary = {{0, 1}};
    const auto d0 = delta_S(g, 0);
    const auto e = euler_invariant(g);
    EXPECT_LE(e, d0);
    EXPECT_EQ(e, oracle::exhaustive_euler(g, 2 * static_cast<std::int64_t>(d0)));
}

TEST(EulerInvariant, RandomGraphsAgreeWithExhaustiveSearch) {
    std::mt19937_64 rng(20240611);
    int checked = 0;
    while (checked < 60) {
        const auto g = oracle::random_geometric_graph(rng, 3, 5);
        const auto r = 2 * static_cast<std::int64_t>(TwistModel(g).objective(g, std::vector<std::int64_t>(TwistModel(g).vars.size(), 0)));
        if (oracle::search_space(g, r) > 2'000'000) continue;
        EXPECT_EQ(euler_invariant(g), oracle::exhaustive_euler(g, r));
        ++checked;
    }
}

TEST(EulerInvariant, Symmetries) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const auto g = oracle::random_geometric_graph(rng);
        const auto e = euler_invariant(g);
        EXPECT_EQ(euler_invariant(oracle::relabel_blocks(g, rng)), e);
        EXPECT_EQ(euler_invariant(oracle::reverse_edges(g)), e);
        EXPECT_EQ(euler_invariant(oracle::change_bases(g, rng)), e);
    }
}

TEST(KleinUnion, MaxOverFiberPairs) {
    EXPECT_EQ(klein_union_e({{1, 0, 0, 1}}), 1u);
    std::uint64_t prev = 0;
    for (std::int64_t n = 1; n <= 20; ++n) {
        const auto v = klein_union_e({{1, 0, n, 1}});
        EXPECT_GE(v, prev);
        EXPECT_GE(v, static_cast<std::uint64_t>(n));
        prev = v;
    }
    // One fiber matched exactly; the other pair still contributes.
    EXPECT_GE(klein_union_e({{0, 1, 1, 0}}), 1u);
    EXPECT_THROW(klein_union_e({{2, 0, 0, 1}}), ValidationError);
}

TEST(VolS, SortedPositiveWithWitnesses) {
    for (const Rational bound : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        const auto v = vol_S_enumerate(bound);
        ASSERT_FALSE(v.empty());
        for (std::size_t i = 0; i < v.size(); ++i) {
            EXPECT_GT(v[i].value, Rational(0));
            EXPECT_LT(v[i].value, bound);
            Rational check(v[i].n);
            for (auto p : v[i].denominators) check -= Rational(1, p);
            EXPECT_EQ(check, v[i].value);
            EXPECT_LE(static_cast<std::int64_t>(v[i].denominators.size()), v[i].n + 2);
            if (i > 0) {
                EXPECT_LT(v[i - 1].value, v[i].value);
            }
        }
    }
    EXPECT_EQ(vol_S_enumerate(Rational(1, 2)).front().value, Rational(1, 42));
    EXPECT_TRUE(vol_S_enumerate(Rational(1, 42)).empty());
}

TEST(VolS, MatchesNestedLoopOracle) {
    // Values below 1 force n/2 - 1 < 1, so n <= 3 and k <= 5. Denominator 1
    // marks an absent term.
    const Rational bound(1);
    std::set<Rational> expected;
    for (std::int64_t n = 1; n <= 3; ++n)
        for (std::int64_t a = 1; a <= 12; ++a)
            for (std::int64_t b = a; b <= 12; ++b)
                for (std::int64_t c = b; c <= 12; ++c)
                    for (std::int64_t d = c; d <= 12; ++d)
                        for (std::int64_t e = d; e <= 12; ++e) {
                            Rational v(n);
                            std::int64_t k = 0;
                            for (std::int64_t p : {a, b, c, d, e})
                                if (p > 1) {
                                    v -= Rational(1, p);
                                    ++k;
                                }
                            if (k <= n + 2 && v > Rational(0) && v < bound) expected.insert(v);
                        }
    std::set<Rational> got;
    for (const auto& w : vol_S_enumerate(bound)) got.insert(w.value);
    EXPECT_EQ(got, expected);
}
