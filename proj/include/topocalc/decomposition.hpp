#pragma once

// Graphs of geometric blocks (Seifert or hyperbolic) glued along tori and
// Klein bottles, with the generalized volume and Euler number computed on
// them.
//
// Torus conventions: a Seifert block's tori are its open boundary tori
// 0..open_boundary-1 in the (section, fiber) basis; a hyperbolic block's
// tori are its cusps, one per preferred-slope set. A gluing matrix maps the
// homology coordinates (p, q) of the `from` torus to those of the `to` torus
// (for Klein bottle edges: to the boundary of the twisted I-bundle W).
//
// Sections vary by integer twists: a twist t on a Seifert torus moves its
// section slope to t/1. A block keeps its Euler number, so the twists of a
// block with no free boundary torus sum to zero.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topocalc/errors.hpp"
#include "topocalc/seifert.hpp"
#include "topocalc/slope.hpp"

namespace topocalc {

struct HyperbolicBlock {
    double volume = 0.0;
    std::vector<std::vector<Slope>> preferred_slopes;  // one set per cusp

    void validate() const {
        if (!(volume > 0.0)) throw ValidationError("hyperbolic volume must be positive");
        for (const auto& set : preferred_slopes) {
            std::vector<Slope> s = set;
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (s.size() < 2) throw ValidationError("a cusp needs at least two distinct preferred slopes");
        }
    }
};

using Block = std::variant<SeifertBlock, HyperbolicBlock>;

inline std::size_t torus_count(const Block& b) {
    if (const auto* s = std::get_if<SeifertBlock>(&b)) return static_cast<std::size_t>(s->open_boundary);
    return std::get<HyperbolicBlock>(b).preferred_slopes.size();
}

struct BoundaryRef {
    std::size_t block = 0;
    std::size_t torus = 0;
    friend auto operator<=>(const BoundaryRef&, const BoundaryRef&) = default;
};

struct GluingEdge {
    enum class Surface { Torus, KleinBottle };

    Surface surface = Surface::Torus;
    BoundaryRef from;
    BoundaryRef to;  // unused for Klein bottle edges
    Matrix2 matrix;
    // The two fibers of the twisted I-bundle, in the coordinates of its
    // boundary torus. Only read for Klein bottle edges.
    std::array<Slope, 2> klein_fibers{Slope::normalize(1, 0), Slope::infinity()};

    bool is_klein() const { return surface == Surface::KleinBottle; }
};

struct DecompGraph {
    std::vector<Block> blocks;
    std::vector<GluingEdge> edges;
    std::vector<BoundaryRef> free_boundary;

    /// Structural checks: indices, |det| = 1, every torus used exactly once,
    /// connectivity. Throws ValidationError.
    void validate() const {
        for (const auto& b : blocks) std::visit([](const auto& x) { x.validate(); }, b);
        std::map<BoundaryRef, int> uses;
        auto touch = [&](const BoundaryRef& r) {
            if (r.block >= blocks.size() || r.torus >= torus_count(blocks[r.block]))
                throw ValidationError("boundary reference out of range");
            ++uses[r];
        };
        for (const auto& e : edges) {
            const std::int64_t d = e.matrix.det();
            if (d != 1 && d != -1) throw ValidationError("gluing matrix must have determinant +-1");
            touch(e.from);
            if (!e.is_klein()) touch(e.to);
        }
        for (const auto& r : free_boundary) touch(r);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t t = 0; t < torus_count(blocks[b]); ++t) {
                const auto it = uses.find({b, t});
                if (it == uses.end() || it->second != 1)
                    throw ValidationError("every boundary torus must lie on exactly one edge or be free");
            }
        if (blocks.empty()) throw ValidationError("empty decomposition");
        std::vector<std::size_t> parent(blocks.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = root(parent[x]);
        };
        for (const auto& e : edges)
            if (!e.is_klein()) parent[root(e.from.block)] = root(e.to.block);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (root(b) != root(0)) throw ValidationError("decomposition graph is not connected");
    }
};

struct GeometricReport {
    bool geometric = true;
    std::vector<std::string> violations;
};

/// Checks the two conditions characterizing the geometric decomposition:
/// Seifert blocks have chi < 0, and adjacent fibrations never agree.
inline GeometricReport validate_geometric(const DecompGraph& g) {
    g.validate();
    if (g.edges.empty()) throw ValidationError("geometricity check needs at least one edge");
    GeometricReport rep;
    for (std::size_t b = 0; b < g.blocks.size(); ++b)
        if (const auto* s = std::get_if<SeifertBlock>(&g.blocks[b]))
            if (chi_orbifold(*s) >= Rational(0)) {
                rep.geometric = false;
                rep.violations.push_back("block " + std::to_string(b) + ": chi(Sigma) = " +
                                         to_string(chi_orbifold(*s)) + " is not negative");
            }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (!std::holds_alternative<SeifertBlock>(g.blocks[e.from.block])) continue;
        const Slope image = e.matrix.apply(Slope::infinity());
        if (e.is_klein()) {
            for (const auto& f : e.klein_fibers)
                if (image == f) {
                    rep.geometric = false;
                    rep.violations.push_back("edge " + std::to_string(i) +
                                             ": block fiber induces a fibration of the Klein bottle");
                }
        } else if (std::holds_alternative<SeifertBlock>(g.blocks[e.to.block]) && image == Slope::infinity()) {
            rep.geometric = false;
            rep.violations.push_back("edge " + std::to_string(i) + ": fibers of the adjacent blocks match");
        }
    }
    return rep;
}

/// Generalized volume of a single geometric block (0 for chi >= 0).
inline double volume(const Block& b) {
    if (const auto* s = std::get_if<SeifertBlock>(&b)) {
        const Rational chi = chi_orbifold(*s);
        return chi >= Rational(0) ? 0.0 : boost::rational_cast<double>(-chi);
    }
    const auto& h = std::get<HyperbolicBlock>(b);
    h.validate();
    return h.volume;
}

/// Sum of hyperbolic volumes minus the chi's of the Seifert blocks. A graph
/// with one block and no edges is a geometric manifold.
inline double volume(const DecompGraph& g) {
    g.validate();
    if (g.edges.empty()) {
        if (g.blocks.size() != 1) throw ValidationError("graph without edges must have one block");
        return volume(g.blocks.front());
    }
    if (!validate_geometric(g).geometric) throw ValidationError("volume needs a geometric decomposition");
    double v = 0.0;
    for (const auto& b : g.blocks) v += volume(b);
    return v;
}

namespace detail {

inline std::vector<Slope> preferred(const Block& b, std::size_t torus, std::int64_t extra_twist) {
    if (torus >= torus_count(b)) throw ValidationError("torus index out of range");
    if (const auto* s = std::get_if<SeifertBlock>(&b))
        return {Slope::infinity(), Slope::normalize(1, s->twist(torus) + extra_twist)};
    return std::get<HyperbolicBlock>(b).preferred_slopes[torus];
}

inline std::uint64_t edge_delta(const DecompGraph& g, const GluingEdge& e, std::int64_t from_twist,
                                std::int64_t to_twist) {
    std::uint64_t best = 0;
    const auto src = preferred(g.blocks[e.from.block], e.from.torus, from_twist);
    if (e.is_klein()) {
        for (const auto& s1 : src)
            for (const auto& f : e.klein_fibers) best = std::max(best, distance(e.matrix.apply(s1), f));
        return best;
    }
    const auto dst = preferred(g.blocks[e.to.block], e.to.torus, to_twist);
    for (const auto& s1 : src) {
        const Slope image = e.matrix.apply(s1);
        for (const auto& s2 : dst) best = std::max(best, distance(image, s2));
    }
    return best;
}

}  // namespace detail

/// Fiber and section-boundary slope for a Seifert torus, the stored set for
/// a hyperbolic cusp.
inline std::vector<Slope> preferred_slopes(const DecompGraph& g, std::size_t block, std::size_t torus) {
    if (block >= g.blocks.size()) throw ValidationError("block index out of range");
    return detail::preferred(g.blocks[block], torus, 0);
}

inline std::uint64_t delta_S(const DecompGraph& g, std::size_t edge) {
    if (edge >= g.edges.size()) throw ValidationError("edge index out of range");
    return detail::edge_delta(g, g.edges[edge], 0, 0);
}

/// Section-twist variables of a graph: one per Seifert torus lying on an
/// edge. Blocks without a free torus must have zero net twist; the last
/// variable of such a block is then determined by the others.
struct TwistModel {
    std::vector<BoundaryRef> vars;
    std::vector<std::optional<std::size_t>> forced_by_block;  // per var: set on the determined var
    std::vector<std::array<std::optional<std::size_t>, 2>> edge_vars;  // per edge: var of from/to
    std::vector<std::vector<std::size_t>> block_vars;
    std::vector<bool> block_closed;

    explicit TwistModel(const DecompGraph& g) {
        std::map<BoundaryRef, std::size_t> index;
        block_vars.resize(g.blocks.size());
        block_closed.assign(g.blocks.size(), false);
        auto var_of = [&](const BoundaryRef& r) -> std::optional<std::size_t> {
            if (!std::holds_alternative<SeifertBlock>(g.blocks[r.block])) return std::nullopt;
            auto [it, inserted] = index.try_emplace(r, vars.size());
            if (inserted) vars.push_back(r);
            return it->second;
        };
        for (const auto& e : g.edges)
            edge_vars.push_back({var_of(e.from), e.is_klein() ? std::nullopt : var_of(e.to)});
        // Variables grouped by block so that a block's determined variable
        // comes last in search order.
        std::vector<std::size_t> order(vars.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vars[a].block < vars[b].block; });
        std::vector<std::size_t> rank(vars.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
        std::vector<BoundaryRef> sorted(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) sorted[rank[i]] = vars[i];
        vars = sorted;
        for (auto& ev : edge_vars)
            for (auto& v : ev)
                if (v) v = rank[*v];
        for (std::size_t i = 0; i < vars.size(); ++i) block_vars[vars[i].block].push_back(i);
        std::vector<bool> has_free(g.blocks.size(), false);
        for (const auto& r : g.free_boundary) has_free[r.block] = true;
        forced_by_block.assign(vars.size(), std::nullopt);
        for (std::size_t b = 0; b < g.blocks.size(); ++b)
            if (!block_vars[b].empty() && !has_free[b]) {
                block_closed[b] = true;
                forced_by_block[block_vars[b].back()] = b;
            }
    }

    std::uint64_t objective(const DecompGraph& g, const std::vector<std::int64_t>& t) const {
        std::uint64_t worst = 0;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto& ev = edge_vars[i];
            worst = std::max(worst, detail::edge_delta(g, g.edges[i], ev[0] ? t[*ev[0]] : 0, ev[1] ? t[*ev[1]] : 0));
        }
        return worst;
    }
};

/// Minimum over admissible section twists of the maximum of Delta_S over all
/// edges. Branch and bound: a twist t on a torus changes the distance from
/// its section slope to a fixed slope s of the other side linearly,
/// |alpha + beta*t| with |beta| = Delta(fiber image, s) >= 1, so any
/// assignment beating the incumbent has |t| <= (incumbent + |alpha|)/|beta|.
inline std::uint64_t euler_invariant(const DecompGraph& g) {
    if (!validate_geometric(g).geometric) throw ValidationError("Euler invariant needs a geometric decomposition");
    const TwistModel model(g);
    const std::size_t n = model.vars.size();
    std::vector<std::int64_t> t(n, 0);
    std::uint64_t best = model.objective(g, t);
    if (n == 0 || best == 0) return best;

    // Linear coefficients (alpha, beta) of each variable against one fixed
    // slope on the opposite side of its edge.
    struct Linear {
        std::int64_t alpha = 0, beta = 0;
    };
    std::vector<Linear> lin(n);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        for (int side = 0; side < 2; ++side) {
            const auto& v = model.edge_vars[i][static_cast<std::size_t>(side)];
            if (!v) continue;
            // Matrix taking this torus's coordinates to the opposite side's.
            const Matrix2 m = side == 0 ? e.matrix : e.matrix.inverse();
            std::vector<Slope> opposite;
            if (e.is_klein()) {
                opposite.assign(e.klein_fibers.begin(), e.klein_fibers.end());
            } else {
                const BoundaryRef& other = side == 0 ? e.to : e.from;
                opposite = detail::preferred(g.blocks[other.block], other.torus, 0);
                if (std::holds_alternative<SeifertBlock>(g.blocks[other.block])) opposite = {Slope::infinity()};
            }
            const std::int64_t base_twist = std::get<SeifertBlock>(g.blocks[model.vars[*v].block]).twist(model.vars[*v].torus);
            Linear pick;
            for (const auto& s : opposite) {
                // section (1, base+t) maps to m*(1,base) + t*m*(0,1)
                const std::int64_t x0 = m.a + m.b * base_twist, y0 = m.c + m.d * base_twist;
                const std::int64_t x1 = m.b, y1 = m.d;
                const std::int64_t alpha = x0 * s.q() - y0 * s.p();
                const std::int64_t beta = x1 * s.q() - y1 * s.p();
                if (std::llabs(beta) > std::llabs(pick.beta)) pick = {alpha, beta};
            }
            if (pick.beta == 0) throw ValidationError("fiber image coincides with every opposite slope");
            lin[*v] = pick;
        }
    }
    auto bound_ok = [&](std::size_t v, std::int64_t val, std::uint64_t incumbent) {
        const __int128 lhs = static_cast<__int128>(std::llabs(lin[v].beta)) * (val < 0 ? -val : val);
        return lhs <= static_cast<__int128>(incumbent) + std::llabs(lin[v].alpha);
    };

    // Edges become evaluable once their highest-numbered variable is set.
    std::vector<std::vector<std::size_t>> ready(n + 1);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        std::size_t last = 0;
        bool any = false;
        for (const auto& v : model.edge_vars[i])
            if (v) {
                last = std::max(last, *v + 1);
                any = true;
            }
        ready[any ? last : 0].push_back(i);
    }
    std::uint64_t fixed = 0;
    for (std::size_t i : ready[0]) fixed = std::max(fixed, detail::edge_delta(g, g.edges[i], 0, 0));
    if (fixed >= best) return best;

    std::vector<std::int64_t> block_sum(g.blocks.size(), 0);
    std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t k, std::uint64_t partial) {
        if (k == n) {
            best = std::min(best, partial);
            return;
        }
        const std::size_t blk = model.vars[k].block;
        auto visit = [&](std::int64_t val) {
            if (!bound_ok(k, val, best - 1)) return;
            t[k] = val;
            block_sum[blk] += val;
            std::uint64_t p = partial;
            for (std::size_t i : ready[k + 1]) {
                const auto& ev = model.edge_vars[i];
                p = std::max(p, detail::edge_delta(g, g.edges[i], ev[0] ? t[*ev[0]] : 0, ev[1] ? t[*ev[1]] : 0));
                if (p >= best) break;
            }
            if (p < best) dfs(k + 1, p);
            block_sum[blk] -= val;
            t[k] = 0;
        };
        if (model.forced_by_block[k]) {
            visit(-block_sum[blk]);
            return;
        }
        const std::int64_t alpha = std::llabs(lin[k].alpha), beta = std::llabs(lin[k].beta);
        const std::int64_t radius = (static_cast<std::int64_t>(best) - 1 + alpha) / beta;
        visit(0);
        for (std::int64_t r = 1; r <= radius; ++r) {
            visit(r);
            visit(-r);
        }
    };
    dfs(0, fixed);
    return best;
}

/// Two twisted I-bundles over the Klein bottle glued along their boundary:
/// the matrix takes the first boundary torus to the second.
struct KleinUnion {
    Matrix2 matrix;
    std::array<Slope, 2> fibers_first{Slope::normalize(1, 0), Slope::infinity()};
    std::array<Slope, 2> fibers_second{Slope::normalize(1, 0), Slope::infinity()};
};

/// Maximum of Delta(l, l') over the fibers of both bundles.
inline std::uint64_t klein_union_e(const KleinUnion& k) {
    const std::int64_t d = k.matrix.det();
    if (d != 1 && d != -1) throw ValidationError("gluing matrix must have determinant +-1");
    std::uint64_t best = 0;
    for (const auto& l : k.fibers_first)
        for (const auto& l2 : k.fibers_second) best = std::max(best, distance(k.matrix.apply(l), l2));
    return best;
}

struct VolWitness {
    Rational value;
    std::int64_t n = 0;
    std::vector<std::int64_t> denominators;  // p_1 <= ... <= p_k
};

/// Elements n - (1/p_1 + ... + 1/p_k) of the Seifert volume set lying in
/// (0, bound), n > 0, 0 <= k <= n + 2, with 2 <= p_i <= max_denominator.
/// The full set has accumulation points from below (1/2 - 1/q -> 1/2), so
/// the denominator cap is what makes the list finite. Sorted ascending,
/// each value with its lexicographically least witness.
inline std::vector<VolWitness> vol_S_enumerate(const Rational& bound, std::int64_t max_denominator = 12) {
    if (bound <= Rational(0)) throw ValidationError("bound must be positive");
    if (max_denominator < 2) throw ValidationError("denominator cap must be at least 2");
    std::map<Rational, VolWitness> found;
    // With every p_i >= 2 the value is at least n - (n+2)/2 = n/2 - 1.
    for (std::int64_t n = 1; Rational(n, 2) - 1 < bound; ++n) {
        std::vector<std::int64_t> ps;
        std::function<void(Rational, std::int64_t)> grow = [&](Rational value, std::int64_t min_p) {
            if (value <= Rational(0)) return;
            if (value < bound) {
                auto it = found.find(value);
                if (it == found.end()) found.emplace(value, VolWitness{value, n, ps});
            }
            const auto remaining = n + 2 - static_cast<std::int64_t>(ps.size());
            if (remaining <= 0) return;
            for (std::int64_t p = min_p; p <= max_denominator; ++p) {
                // Even the largest remaining decrease cannot reach below bound.
                if (value - Rational(remaining, p) >= bound) break;
                ps.push_back(p);
                grow(value - Rational(1, p), p);
                ps.pop_back();
            }
        };
        grow(Rational(n), 2);
    }
    std::vector<VolWitness> out;
    out.reserve(found.size());
    for (auto& [v, w] : found) out.push_back(std::move(w));
    return out;
}

}  // namespace topocalc
