#pragma once

// Special shadows: simple polyhedra whose singular set is a 4-valent graph
// of triple edges and whose regions are discs, given combinatorially.
//
// Edge e has a tail end (id 2e, at ends[0]) and a head end (id 2e+1, at
// ends[1]). A closed triple circle is an edge with no ends. A region is a
// disc glued along a closed walk of signed steps: +(e+1) runs e from tail to
// head, -(e+1) from head to tail. Each pair of consecutive steps turns a
// corner at a vertex between the arrival end and the departure end.
//
// Gleams are half-integers stored doubled.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topocalc/errors.hpp"
#include "topocalc/kirby.hpp"

namespace topocalc {

struct ShadowEdge {
    std::vector<std::size_t> ends;  // two vertices, or none for a circle
    friend bool operator==(const ShadowEdge&, const ShadowEdge&) = default;
};

struct ShadowRegion {
    std::vector<std::int64_t> walk;
    std::int64_t gleam_twice = 0;
    friend bool operator==(const ShadowRegion&, const ShadowRegion&) = default;
};

/// Counterclockwise order of the four edge ends at every vertex, used to
/// draw the shadow in the plane.
using ShadowLayout = std::vector<std::array<std::size_t, 4>>;

inline constexpr const char* kGleamConvention = "artifact-v1";

struct SpecialShadow {
    std::size_t vertices = 0;
    std::vector<ShadowEdge> edges;
    std::vector<ShadowRegion> regions;
    std::optional<ShadowLayout> layout;
    std::string gleam_convention = kGleamConvention;

    std::size_t vertex_count() const { return vertices; }
    friend bool operator==(const SpecialShadow&, const SpecialShadow&) = default;
};

inline std::string gleam_to_string(std::int64_t twice) {
    return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

struct ShadowCheck {
    bool special = false;
    std::vector<std::string> violations;
};

namespace detail {

struct Step {
    std::size_t edge;
    bool forward;
    std::size_t depart() const { return 2 * edge + (forward ? 0 : 1); }
    std::size_t arrive() const { return 2 * edge + (forward ? 1 : 0); }
};

inline Step decode_step(std::int64_t s) {
    return {static_cast<std::size_t>((s < 0 ? -s : s) - 1), s > 0};
}

inline std::int64_t encode_step(std::size_t edge, bool forward) {
    const auto v = static_cast<std::int64_t>(edge) + 1;
    return forward ? v : -v;
}

inline std::size_t end_vertex(const SpecialShadow& p, std::size_t end) { return p.edges[end / 2].ends[end % 2]; }

// Throws on references that make the data meaningless.
inline void check_references(const SpecialShadow& p) {
    for (const auto& e : p.edges) {
        if (!e.ends.empty() && e.ends.size() != 2) throw ValidationError("edge must have two ends or none");
        for (auto v : e.ends)
            if (v >= p.vertices) throw ValidationError("edge end refers to a missing vertex");
    }
    for (const auto& r : p.regions)
        for (auto s : r.walk)
            if (s == 0 || static_cast<std::size_t>(s < 0 ? -s : s) > p.edges.size())
                throw ValidationError("region walk refers to a missing edge");
}

}  // namespace detail

inline ShadowCheck check_special(const SpecialShadow& p) {
    detail::check_references(p);
    ShadowCheck out;
    auto fail = [&](std::string why) { out.violations.push_back(std::move(why)); };
    if (p.vertices == 0) fail("no vertices: the singular set does not cut the polyhedron into discs");
    std::vector<std::size_t> degree(p.vertices, 0);
    bool circles = false;
    for (const auto& e : p.edges) {
        if (e.ends.empty()) circles = true;
        for (auto v : e.ends) ++degree[v];
    }
    if (circles) fail("closed triple circle without vertices");
    for (std::size_t v = 0; v < p.vertices; ++v)
        if (degree[v] != 4) fail("vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    if (p.edges.size() != 2 * p.vertices) fail("a special shadow has twice as many edges as vertices");

    std::vector<std::size_t> traversals(p.edges.size(), 0);
    std::map<std::size_t, std::set<std::pair<std::size_t, std::size_t>>> corners;
    bool corner_clash = false, broken_walk = false;
    for (std::size_t r = 0; r < p.regions.size(); ++r) {
        const auto& w = p.regions[r].walk;
        if (w.empty()) {
            fail("region " + std::to_string(r) + " is not a disc bounded by the singular set");
            continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto a = detail::decode_step(w[i]);
            const auto b = detail::decode_step(w[(i + 1) % w.size()]);
            ++traversals[a.edge];
            if (p.edges[a.edge].ends.empty() || p.edges[b.edge].ends.empty()) continue;
            const std::size_t in = a.arrive(), outend = b.depart();
            const std::size_t v = detail::end_vertex(p, in);
            if (v != detail::end_vertex(p, outend)) {
                broken_walk = true;
                continue;
            }
            if (!corners[v].insert(std::minmax(in, outend)).second || in == outend) corner_clash = true;
        }
    }
    if (broken_walk) fail("a region walk is not closed");
    for (std::size_t e = 0; e < p.edges.size(); ++e)
        if (traversals[e] != 3)
            fail("edge " + std::to_string(e) + " bounds " + std::to_string(traversals[e]) + " region sides instead of 3");
    if (corner_clash) fail("a vertex has a repeated or degenerate corner");
    for (std::size_t v = 0; v < p.vertices; ++v)
        if (degree[v] == 4 && corners[v].size() != 6)
            fail("vertex " + std::to_string(v) + " does not look like the cone over the 1-skeleton of a tetrahedron");

    std::vector<std::size_t> parent(p.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : p.edges)
        if (e.ends.size() == 2) detail::unite(parent, e.ends[0], e.ends[1]);
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < p.vertices; ++v) roots.insert(detail::find_root(parent, v));
    if (roots.size() > 1) fail("the singular set is disconnected");
    out.special = out.violations.empty();
    return out;
}

inline bool is_special(const SpecialShadow& p) { return check_special(p).special; }

inline void require_special(const SpecialShadow& p) {
    const auto c = check_special(p);
    if (!c.special) throw ValidationError("not a special shadow: " + c.violations.front());
}

// ---------------------------------------------------------------------------
// Kirby diagram -> shadow.

/// The boundary of the 0- and 1-handles is a sphere with tubes; the link
/// projects to it, and each tube carries the boundary of a cocore disc.
/// The polyhedron is that surface with the cores of the 2-handles and the
/// cocore discs attached. Vertices are crossings and the points where a
/// strand runs through a tube. Core discs carry their component's framing
/// as gleam; the other regions carry 0.
inline SpecialShadow from_kirby(const KirbyDiagram& d) {
    d.validate();
    if (!is_connected(d)) throw ValidationError("from_kirby needs a connected diagram; apply connect first");
    if (d.signs.empty()) throw ValidationError("from_kirby needs at least one crossing; apply connect first");

    const std::size_t C = d.signs.size();
    std::vector<std::size_t> pair_base(d.disc_pairs.size());
    std::size_t V = C;
    for (std::size_t p = 0; p < d.disc_pairs.size(); ++p) {
        pair_base[p] = V;
        V += d.disc_pairs[p];
    }
    SpecialShadow out;
    out.vertices = V;

    // Per vertex: ends arranged by role; filled as edges are created.
    // Crossing: [under-in, under-out, over-in, over-out].
    // Tube point: [strand-in, strand-out, cocore-in, cocore-out].
    std::vector<std::array<std::size_t, 4>> role(V);
    auto add_edge = [&](std::size_t from, std::size_t to) {
        out.edges.push_back({{from, to}});
        return out.edges.size() - 1;
    };
    auto passage_vertex = [&](const DiscEnd& e) { return pair_base[e.pair] + e.pos; };

    // Arcs of each strand, in order.
    std::vector<std::vector<std::size_t>> arcs_of(d.strands.size());
    for (std::size_t s = 0; s < d.strands.size(); ++s) {
        const auto& st = d.strands[s];
        if (st.closed && st.passages.empty())
            throw ValidationError("crossingless closed component would give a triple circle");
        // Sequence of (vertex, role slot for arrive, role slot for depart).
        struct Stop {
            std::size_t v;
            int in_slot, out_slot;
        };
        std::vector<Stop> stops;
        for (const auto& ps : st.passages) stops.push_back({ps.crossing, ps.over ? 2 : 0, ps.over ? 3 : 1});
        if (st.closed) {
            for (std::size_t i = 0; i < stops.size(); ++i) {
                const auto& a = stops[i];
                const auto& b = stops[(i + 1) % stops.size()];
                const auto e = add_edge(a.v, b.v);
                role[a.v][static_cast<std::size_t>(a.out_slot)] = 2 * e;
                role[b.v][static_cast<std::size_t>(b.in_slot)] = 2 * e + 1;
                arcs_of[s].push_back(e);
            }
            continue;
        }
        stops.insert(stops.begin(), Stop{passage_vertex(*st.start), -1, 1});
        stops.push_back(Stop{passage_vertex(*st.end), 0, -1});
        for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
            const auto& a = stops[i];
            const auto& b = stops[i + 1];
            const auto e = add_edge(a.v, b.v);
            role[a.v][static_cast<std::size_t>(a.out_slot)] = 2 * e;
            role[b.v][static_cast<std::size_t>(b.in_slot)] = 2 * e + 1;
            arcs_of[s].push_back(e);
        }
    }
    // Cocore circles.
    std::vector<std::vector<std::size_t>> cocore(d.disc_pairs.size());
    for (std::size_t p = 0; p < d.disc_pairs.size(); ++p) {
        const std::size_t k = d.disc_pairs[p];
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t a = pair_base[p] + j, b = pair_base[p] + (j + 1) % k;
            const auto e = add_edge(a, b);
            role[a][3] = 2 * e;
            role[b][2] = 2 * e + 1;
            cocore[p].push_back(e);
        }
    }

    // Counterclockwise rotation at each vertex.
    std::vector<std::array<std::size_t, 4>> rot(V);
    for (std::size_t x = 0; x < C; ++x) {
        const auto& r = role[x];
        rot[x] = d.signs[x] > 0 ? std::array<std::size_t, 4>{r[0], r[3], r[1], r[2]}
                                : std::array<std::size_t, 4>{r[0], r[2], r[1], r[3]};
    }
    for (std::size_t v = C; v < V; ++v) {
        const auto& r = role[v];
        rot[v] = {r[0], r[3], r[1], r[2]};
    }

    // Faces of the surface: leave along end h, arrive at its partner, turn to
    // the next end counterclockwise.
    std::vector<std::size_t> next_ccw(2 * out.edges.size());
    for (const auto& r : rot)
        for (std::size_t i = 0; i < 4; ++i) next_ccw[r[i]] = r[(i + 1) % 4];
    std::vector<bool> used(2 * out.edges.size(), false);
    for (std::size_t h0 = 0; h0 < used.size(); ++h0) {
        if (used[h0]) continue;
        ShadowRegion face;
        for (std::size_t h = h0; !used[h];) {
            used[h] = true;
            face.walk.push_back(detail::encode_step(h / 2, h % 2 == 0));
            h = next_ccw[h ^ 1];
        }
        out.regions.push_back(std::move(face));
    }
    // Core discs of the 2-handles.
    const auto comp = d.component_of();
    const auto starts = detail::starts_by_end(d);
    std::vector<bool> done(d.strands.size(), false);
    for (std::size_t s0 = 0; s0 < d.strands.size(); ++s0) {
        if (done[s0]) continue;
        ShadowRegion core;
        core.gleam_twice = 2 * d.framings[comp[s0]];
        for (std::size_t s = s0; !done[s];) {
            done[s] = true;
            for (auto e : arcs_of[s]) core.walk.push_back(detail::encode_step(e, true));
            if (d.strands[s].closed) break;
            s = starts.at(detail::through(*d.strands[s].end));
        }
        out.regions.push_back(std::move(core));
    }
    for (const auto& c : cocore) {
        ShadowRegion disc;
        for (auto e : c) disc.walk.push_back(detail::encode_step(e, true));
        out.regions.push_back(std::move(disc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cut systems and shadow -> Kirby diagram.

struct CutSystem {
    std::vector<std::size_t> edges;  // the n+1 edges outside a spanning tree
};

inline void validate_cut_system(const SpecialShadow& p, const CutSystem& cuts) {
    std::set<std::size_t> cut(cuts.edges.begin(), cuts.edges.end());
    if (cut.size() != cuts.edges.size()) throw ValidationError("cut system lists an edge twice");
    for (auto e : cut)
        if (e >= p.edges.size()) throw ValidationError("cut system refers to a missing edge");
    if (cut.size() != p.vertices + 1) throw ValidationError("a cut system has one more edge than there are vertices");
    std::vector<std::size_t> parent(p.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        if (cut.contains(e)) continue;
        const auto a = detail::find_root(parent, p.edges[e].ends[0]);
        const auto b = detail::find_root(parent, p.edges[e].ends[1]);
        if (a == b) throw ValidationError("edges outside the cut system contain a cycle");
        detail::unite(parent, a, b);
    }
}

inline CutSystem find_cut_system(const SpecialShadow& p) {
    require_special(p);
    std::vector<std::size_t> parent(p.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    CutSystem out;
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const auto a = detail::find_root(parent, p.edges[e].ends[0]);
        const auto b = detail::find_root(parent, p.edges[e].ends[1]);
        if (a == b) out.edges.push_back(e);
        else detail::unite(parent, a, b);
    }
    return out;
}

namespace detail {

// Traversal of an edge: region r, walk step i.
struct Traversal {
    std::size_t region, step;
    friend auto operator<=>(const Traversal&, const Traversal&) = default;
};

struct CornerIndex {
    // For every edge end, the traversals through it and the other end of
    // the corner each one turns at that vertex.
    std::vector<std::vector<std::pair<Traversal, std::size_t>>> at_end;
};

inline CornerIndex index_corners(const SpecialShadow& p) {
    CornerIndex ix;
    ix.at_end.resize(2 * p.edges.size());
    for (std::size_t r = 0; r < p.regions.size(); ++r) {
        const auto& w = p.regions[r].walk;
        const std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto cur = decode_step(w[i]);
            const auto prev = decode_step(w[(i + n - 1) % n]);
            const auto next = decode_step(w[(i + 1) % n]);
            ix.at_end[cur.depart()].push_back({{r, i}, prev.arrive()});
            ix.at_end[cur.arrive()].push_back({{r, i}, next.depart()});
        }
    }
    return ix;
}

// Tracks along end E looking out of the vertex, left to right: the corner
// towards the next end, the diagonal, the corner towards the previous end.
inline std::array<Traversal, 3> tracks_at(const CornerIndex& ix, const std::array<std::size_t, 4>& rot, std::size_t end) {
    const auto k = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), end) - rot.begin());
    const std::array<std::size_t, 3> partner{rot[(k + 1) % 4], rot[(k + 2) % 4], rot[(k + 3) % 4]};
    std::array<Traversal, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        bool found = false;
        for (const auto& [t, other] : ix.at_end[end])
            if (other == partner[i]) {
                out[i] = t;
                found = true;
            }
        if (!found) throw ValidationError("layout does not match the corners of the shadow");
    }
    return out;
}

}  // namespace detail

/// A layout in which no edge of the spanning tree complementary to the cut
/// system needs twisting: each vertex is oriented to continue the tracks of
/// the tree edge it was reached by.
inline ShadowLayout compute_layout(const SpecialShadow& p, const CutSystem& cuts) {
    require_special(p);
    validate_cut_system(p, cuts);
    const auto ix = detail::index_corners(p);
    const std::set<std::size_t> cut(cuts.edges.begin(), cuts.edges.end());
    std::vector<std::vector<std::size_t>> ends_at(p.vertices);
    for (std::size_t h = 0; h < 2 * p.edges.size(); ++h) ends_at[detail::end_vertex(p, h)].push_back(h);

    ShadowLayout layout(p.vertices);
    std::vector<bool> placed(p.vertices, false);
    std::queue<std::size_t> todo;
    layout[0] = {ends_at[0][0], ends_at[0][1], ends_at[0][2], ends_at[0][3]};
    placed[0] = true;
    todo.push(0);
    while (!todo.empty()) {
        const std::size_t v = todo.front();
        todo.pop();
        for (auto h : ends_at[v]) {
            if (cut.contains(h / 2)) continue;
            const std::size_t far = h ^ 1;
            const std::size_t w = detail::end_vertex(p, far);
            if (placed[w]) continue;
            // Untwisted band: the left-to-right order at the far end is the
            // reverse of the order at this end.
            const auto here = detail::tracks_at(ix, layout[v], h);
            std::array<std::size_t, 4> rot{far, 0, 0, 0};
            for (std::size_t i = 0; i < 3; ++i) {
                const auto& want = here[2 - i];
                for (const auto& [t, other] : ix.at_end[far])
                    if (t == want) rot[1 + i] = other;
            }
            layout[w] = rot;
            placed[w] = true;
            todo.push(w);
        }
    }
    return layout;
}

namespace detail {

// Adjacent transpositions taking the order `from` to the order `to`.
inline std::vector<std::size_t> bubble_swaps(std::array<Traversal, 3> from, const std::array<Traversal, 3>& to) {
    std::vector<std::size_t> swaps;
    for (std::size_t target = 0; target < 3; ++target) {
        std::size_t i = static_cast<std::size_t>(std::find(from.begin(), from.end(), to[target]) - from.begin());
        if (i == 3) throw ValidationError("edge tracks do not match at its two ends");
        while (i > target) {
            std::swap(from[i - 1], from[i]);
            swaps.push_back(i - 1);
            --i;
        }
    }
    return swaps;
}

}  // namespace detail

/// Twist crossings each edge needs under a layout.
inline std::vector<std::size_t> edge_twists(const SpecialShadow& p, const ShadowLayout& layout) {
    const auto ix = detail::index_corners(p);
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const auto tail = detail::tracks_at(ix, layout[p.edges[e].ends[0]], 2 * e);
        auto head = detail::tracks_at(ix, layout[p.edges[e].ends[1]], 2 * e + 1);
        std::reverse(head.begin(), head.end());
        out.push_back(detail::bubble_swaps(tail, head).size());
    }
    return out;
}

/// Kirby diagram of the 4-manifold with shadow p. Drawn from the layout
/// (computed when absent), each region becomes a 2-handle whose attaching
/// curve follows its walk: one crossing per vertex where the two diagonal
/// corners meet, at most three crossings on each cut edge, and every curve
/// runs through a 1-handle wherever it crosses a cut edge. The result has
/// 3(n+1) strands and 2(n+1) discs. Framings are the floors of the gleams.
inline KirbyDiagram to_kirby(const SpecialShadow& p, const CutSystem& cuts) {
    require_special(p);
    validate_cut_system(p, cuts);
    const ShadowLayout layout = p.layout ? *p.layout : compute_layout(p, cuts);
    if (layout.size() != p.vertices) throw ValidationError("layout needs one rotation per vertex");
    for (std::size_t v = 0; v < p.vertices; ++v) {
        auto sorted = layout[v];
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> ends;
        for (std::size_t h = 0; h < 2 * p.edges.size(); ++h)
            if (detail::end_vertex(p, h) == v) ends.push_back(h);
        if (!std::equal(sorted.begin(), sorted.end(), ends.begin(), ends.end()))
            throw ValidationError("layout rotation at vertex " + std::to_string(v) + " is not its four edge ends");
    }
    const auto ix = detail::index_corners(p);
    const std::set<std::size_t> cut(cuts.edges.begin(), cuts.edges.end());

    KirbyDiagram d;
    // Events along each traversal, in the direction of the edge.
    struct Event {
        bool is_cut = false;
        Passage passage{};
        DiscEnd at{};  // cut position
    };
    std::map<detail::Traversal, std::vector<Event>> along;
    std::map<std::size_t, std::size_t> pair_of;
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const auto tail = detail::tracks_at(ix, layout[p.edges[e].ends[0]], 2 * e);
        auto head = detail::tracks_at(ix, layout[p.edges[e].ends[1]], 2 * e + 1);
        std::reverse(head.begin(), head.end());
        auto order = tail;
        const auto swaps = detail::bubble_swaps(tail, head);
        if (!swaps.empty() && !cut.contains(e))
            throw ValidationError("layout twists edge " + std::to_string(e) + " of the spanning tree");
        for (auto i : swaps) {
            // The track moving right passes over.
            const std::size_t x = d.signs.size();
            d.signs.push_back(1);
            along[order[i]].push_back({false, {x, true}, {}});
            along[order[i + 1]].push_back({false, {x, false}, {}});
            std::swap(order[i], order[i + 1]);
        }
        if (cut.contains(e)) {
            const std::size_t pr = d.disc_pairs.size();
            d.disc_pairs.push_back(3);
            pair_of[e] = pr;
            for (std::size_t t = 0; t < 3; ++t) along[order[t]].push_back({true, {}, {pr, 0, t}});
        }
    }
    // Vertex crossings: corner {rot0, rot2} passes under {rot1, rot3}.
    std::map<std::pair<std::size_t, std::size_t>, Passage> at_corner;
    for (std::size_t v = 0; v < p.vertices; ++v) {
        const std::size_t x = d.signs.size();
        d.signs.push_back(1);
        const auto& r = layout[v];
        at_corner[std::minmax(r[0], r[2])] = {x, false};
        at_corner[std::minmax(r[1], r[3])] = {x, true};
    }

    for (std::size_t r = 0; r < p.regions.size(); ++r) {
        const auto& w = p.regions[r].walk;
        std::vector<Event> seq;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto s = detail::decode_step(w[i]);
            auto ev = along[{r, i}];
            if (!s.forward) std::reverse(ev.begin(), ev.end());
            seq.insert(seq.end(), ev.begin(), ev.end());
            const auto next = detail::decode_step(w[(i + 1) % w.size()]);
            const auto it = at_corner.find(std::minmax(s.arrive(), next.depart()));
            if (it != at_corner.end()) seq.push_back({false, it->second, {}});
        }
        const auto first_cut = static_cast<std::size_t>(
            std::find_if(seq.begin(), seq.end(), [](const Event& ev) { return ev.is_cut; }) - seq.begin());
        if (first_cut == seq.size()) throw ValidationError("region curve misses every cut edge");
        std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(first_cut) + 1, seq.end());
        // seq now ends with a cut; every piece runs from one cut to the next.
        DiscEnd resume = seq.back().at;
        Strand cur{{}, false, DiscEnd{resume.pair, 1, resume.pos}, {}};
        for (const auto& ev : seq) {
            if (!ev.is_cut) {
                cur.passages.push_back(ev.passage);
                continue;
            }
            cur.end = ev.at;
            d.strands.push_back(cur);
            cur = Strand{{}, false, DiscEnd{ev.at.pair, 1, ev.at.pos}, {}};
        }
        const std::int64_t g = p.regions[r].gleam_twice;
        d.framings.push_back(g >= 0 ? g / 2 : -((-g + 1) / 2));
    }
    d.validate();
    return d;
}

/// One vertex, two loops and two regions: the walks e0 and e1 e1 e0 e1 e0^-1.
inline SpecialShadow abalone(std::int64_t gleam_twice0 = 0, std::int64_t gleam_twice1 = 0) {
    SpecialShadow p;
    p.vertices = 1;
    p.edges = {{{0, 0}}, {{0, 0}}};
    p.regions = {{{1}, gleam_twice0}, {{2, 2, 1, 2, -1}, gleam_twice1}};
    return p;
}

}  // namespace topocalc
