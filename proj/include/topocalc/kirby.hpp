#pragma once

// Kirby diagrams: a link diagram in the plane together with pairs of discs
// (1-handles). Open strands end on the discs; a strand ending at position j
// of disc 0 of a pair continues from position j of disc 1.
//
// Internally a strand is the ordered list of crossings it passes, each as
// an under- or over-passage. The planar diagram (PD) code with arc labels is
// an interchange format: to_pd() labels arcs 1..N strand by strand, and
// from_pd() recovers the passages while checking the code.
//
// PD convention: a crossing [a, b, c, d] lists its arcs counterclockwise
// starting from the incoming under-arc a, so c is the outgoing under-arc.
// The over-strand runs d -> b at a positive crossing and b -> d at a
// negative one.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topocalc/errors.hpp"
#include "topocalc/forms.hpp"

namespace topocalc {

/// linking_matrix needs a diagram without 1-handles.
class OneHandleError : public ValidationError {
public:
    OneHandleError() : ValidationError("linking matrix is undefined for diagrams with 1-handles") {}
};

struct DiscEnd {
    std::size_t pair = 0;
    int side = 0;
    std::size_t pos = 0;
    friend auto operator<=>(const DiscEnd&, const DiscEnd&) = default;
};

struct Passage {
    std::size_t crossing = 0;
    bool over = false;
    friend bool operator==(const Passage&, const Passage&) = default;
};

struct Strand {
    std::vector<Passage> passages;
    bool closed = true;
    std::optional<DiscEnd> start;
    std::optional<DiscEnd> end;
    friend bool operator==(const Strand&, const Strand&) = default;
};

struct KirbyDiagram {
    std::vector<int> signs;                 // one per crossing
    std::vector<Strand> strands;
    std::vector<std::size_t> disc_pairs;    // attachment positions per pair
    std::vector<std::int64_t> framings;     // one per link component

    std::size_t crossing_count() const { return signs.size(); }
    std::size_t disc_count() const { return 2 * disc_pairs.size(); }

    /// crossings + discs + strands.
    std::size_t weight() const { return crossing_count() + disc_count() + strands.size(); }

    /// Component index of every strand. Components are numbered by their
    /// first strand. Precondition: the disc data is consistent.
    std::vector<std::size_t> component_of() const;
    std::size_t component_count() const;

    void validate() const;

    friend bool operator==(const KirbyDiagram&, const KirbyDiagram&) = default;
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

inline void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // the smaller index stays the root
}

// Strand starting at each disc position.
inline std::map<DiscEnd, std::size_t> starts_by_end(const KirbyDiagram& d) {
    std::map<DiscEnd, std::size_t> out;
    for (std::size_t s = 0; s < d.strands.size(); ++s)
        if (d.strands[s].start) out[*d.strands[s].start] = s;
    return out;
}

inline DiscEnd through(const DiscEnd& e) { return {e.pair, 1 - e.side, e.pos}; }

}  // namespace detail

inline std::vector<std::size_t> KirbyDiagram::component_of() const {
    std::vector<std::size_t> parent(strands.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto starts = detail::starts_by_end(*this);
    for (std::size_t s = 0; s < strands.size(); ++s)
        if (strands[s].end) {
            const auto it = starts.find(detail::through(*strands[s].end));
            if (it == starts.end()) throw ValidationError("strand end has no continuation through its disc pair");
            detail::unite(parent, s, it->second);
        }
    std::vector<std::size_t> comp(strands.size());
    std::map<std::size_t, std::size_t> number;
    for (std::size_t s = 0; s < strands.size(); ++s) {
        const std::size_t r = detail::find_root(parent, s);
        auto [it, inserted] = number.try_emplace(r, number.size());
        comp[s] = it->second;
    }
    return comp;
}

inline std::size_t KirbyDiagram::component_count() const {
    const auto comp = component_of();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

inline void KirbyDiagram::validate() const {
    for (int s : signs)
        if (s != 1 && s != -1) throw ValidationError("crossing sign must be +1 or -1");
    std::vector<int> under(signs.size(), 0), over(signs.size(), 0);
    std::map<DiscEnd, int> used;  // +1 for an end, -1 for a start
    for (const auto& st : strands) {
        for (const auto& p : st.passages) {
            if (p.crossing >= signs.size()) throw ValidationError("passage refers to a missing crossing");
            ++(p.over ? over : under)[p.crossing];
        }
        if (st.closed) {
            if (st.start || st.end) throw ValidationError("closed strand cannot end on a disc");
            continue;
        }
        if (!st.start || !st.end) throw ValidationError("open strand needs both endpoints on discs");
        for (const auto* e : {&*st.start, &*st.end}) {
            if (e->pair >= disc_pairs.size()) throw ValidationError("strand endpoint on a missing disc pair");
            if (e->side != 0 && e->side != 1) throw ValidationError("disc side must be 0 or 1");
            if (e->pos >= disc_pairs[e->pair]) throw ValidationError("strand endpoint position out of range");
            if (used.contains(*e)) throw ValidationError("two strand endpoints share a disc position");
            used[*e] = e == &*st.end ? 1 : -1;
        }
    }
    for (std::size_t x = 0; x < signs.size(); ++x)
        if (under[x] != 1 || over[x] != 1)
            throw ValidationError("crossing " + std::to_string(x) + " needs exactly one under- and one over-passage");
    for (std::size_t p = 0; p < disc_pairs.size(); ++p)
        for (std::size_t j = 0; j < disc_pairs[p]; ++j) {
            const auto a = used.find({p, 0, j}), b = used.find({p, 1, j});
            if (a == used.end() || b == used.end())
                throw ValidationError("disc position is not attached on both discs of the pair");
            if (a->second + b->second != 0)
                throw ValidationError("a strand entering one disc must leave the mirrored position of the other");
        }
    if (framings.size() != component_count())
        throw ValidationError("need one framing per link component");
}

// ---------------------------------------------------------------------------
// PD interchange form.

struct PdCrossing {
    std::array<std::int64_t, 4> arcs{};
    int sign = 1;
};

struct PdStrand {
    std::vector<std::int64_t> arcs;
    bool closed = true;
    std::optional<DiscEnd> start;
    std::optional<DiscEnd> end;
};

struct PdDiagram {
    std::vector<PdCrossing> crossings;
    std::vector<PdStrand> strands;
    std::vector<std::size_t> disc_pairs;
    std::map<std::size_t, std::int64_t> framings;  // missing components are 0-framed
};

namespace detail {

// Slots entered and left by the over-strand.
inline int over_in_slot(int sign) { return sign > 0 ? 3 : 1; }
inline int over_out_slot(int sign) { return sign > 0 ? 1 : 3; }

}  // namespace detail

inline PdDiagram to_pd(const KirbyDiagram& d) {
    d.validate();
    PdDiagram out;
    out.disc_pairs = d.disc_pairs;
    out.crossings.resize(d.signs.size());
    for (std::size_t x = 0; x < d.signs.size(); ++x) out.crossings[x].sign = d.signs[x];
    std::int64_t next = 1;
    for (const auto& st : d.strands) {
        PdStrand ps;
        ps.closed = st.closed;
        ps.start = st.start;
        ps.end = st.end;
        const std::size_t m = st.passages.size();
        const std::size_t arcs = st.closed ? std::max<std::size_t>(m, 1) : m + 1;
        for (std::size_t i = 0; i < arcs; ++i) ps.arcs.push_back(next + static_cast<std::int64_t>(i));
        // Arc i enters passage i and arc i+1 (cyclically when closed) leaves it.
        for (std::size_t i = 0; i < m; ++i) {
            const auto& p = st.passages[i];
            const std::int64_t in = ps.arcs[i];
            const std::int64_t outarc = ps.arcs[st.closed ? (i + 1) % arcs : i + 1];
            auto& c = out.crossings[p.crossing];
            if (p.over) {
                c.arcs[static_cast<std::size_t>(detail::over_in_slot(c.sign))] = in;
                c.arcs[static_cast<std::size_t>(detail::over_out_slot(c.sign))] = outarc;
            } else {
                c.arcs[0] = in;
                c.arcs[2] = outarc;
            }
        }
        next += static_cast<std::int64_t>(arcs);
        out.strands.push_back(std::move(ps));
    }
    const auto comp_count = d.component_count();
    for (std::size_t c = 0; c < comp_count; ++c) out.framings[c] = d.framings[c];
    return out;
}

inline KirbyDiagram from_pd(const PdDiagram& pd) {
    struct Slot {
        std::size_t crossing;
        int slot;
    };
    std::map<std::int64_t, Slot> head, tail;  // slot entered / left by each arc
    KirbyDiagram d;
    for (std::size_t x = 0; x < pd.crossings.size(); ++x) {
        const auto& c = pd.crossings[x];
        if (c.sign != 1 && c.sign != -1) throw ValidationError("crossing sign must be +1 or -1");
        d.signs.push_back(c.sign);
        for (int k = 0; k < 4; ++k) {
            const bool in = k == 0 || k == detail::over_in_slot(c.sign);
            auto& table = in ? head : tail;
            const auto arc = c.arcs[static_cast<std::size_t>(k)];
            if (!table.emplace(arc, Slot{x, k}).second)
                throw ValidationError("arc " + std::to_string(arc) + " enters or leaves two crossing slots");
        }
    }
    std::set<std::int64_t> seen;
    std::size_t passages = 0;
    for (const auto& ps : pd.strands) {
        if (ps.arcs.empty()) throw ValidationError("strand without arcs");
        for (auto a : ps.arcs)
            if (!seen.insert(a).second) throw ValidationError("arc " + std::to_string(a) + " listed twice");
        Strand st;
        st.closed = ps.closed;
        st.start = ps.start;
        st.end = ps.end;
        const std::size_t n = ps.arcs.size();
        std::size_t links = ps.closed ? n : n - 1;
        if (ps.closed && n == 1 && !head.contains(ps.arcs[0])) {
            if (tail.contains(ps.arcs[0])) throw ValidationError("closed strand leaves a crossing it never enters");
            links = 0;
        }
        for (std::size_t i = 0; i < links; ++i) {
            const auto a = ps.arcs[i], b = ps.arcs[(i + 1) % n];
            const auto h = head.find(a);
            const auto t = tail.find(b);
            if (h == head.end() || t == tail.end() || h->second.crossing != t->second.crossing)
                throw ValidationError("arcs " + std::to_string(a) + " and " + std::to_string(b) +
                                      " do not meet at a crossing");
            const bool over = h->second.slot != 0;
            if (over != (t->second.slot != 2)) throw ValidationError("strand switches between under and over at a crossing");
            st.passages.push_back({h->second.crossing, over});
        }
        if (!ps.closed && (tail.contains(ps.arcs.front()) || head.contains(ps.arcs.back())))
            throw ValidationError("open strand must start and end on discs");
        passages += st.passages.size();
        d.strands.push_back(std::move(st));
    }
    if (passages != 2 * d.signs.size()) throw ValidationError("crossing slots not covered by the strands");
    d.disc_pairs = pd.disc_pairs;
    const std::size_t comps = d.component_count();
    for (const auto& [c, f] : pd.framings)
        if (c >= comps) throw ValidationError("framing given for missing component " + std::to_string(c));
    d.framings.assign(comps, 0);
    for (const auto& [c, f] : pd.framings) d.framings[c] = f;
    d.validate();
    return d;
}

// ---------------------------------------------------------------------------
// Builders.

inline KirbyDiagram empty_diagram() { return {}; }

inline KirbyDiagram unknot(std::int64_t framing) {
    KirbyDiagram d;
    d.strands.push_back({});
    d.framings.push_back(framing);
    return d;
}

/// Standard two-crossing Hopf link; component 0 passes over first.
inline KirbyDiagram hopf(std::int64_t framing0, std::int64_t framing1) {
    KirbyDiagram d;
    d.signs = {1, 1};
    d.strands.push_back({{{0, true}, {1, false}}, true, {}, {}});
    d.strands.push_back({{{0, false}, {1, true}}, true, {}, {}});
    d.framings = {framing0, framing1};
    return d;
}

// ---------------------------------------------------------------------------
// Local moves. Positions index the passage lists; inserting at position i
// puts the new passages just before the current passage i.

namespace detail {

inline void insert_passages(Strand& s, std::size_t pos, std::initializer_list<Passage> ps) {
    pos = std::min(pos, s.passages.size());
    s.passages.insert(s.passages.begin() + static_cast<std::ptrdiff_t>(pos), ps);
}

}  // namespace detail

/// Reidemeister II: a finger of strand a pushed over strand b.
inline KirbyDiagram add_rii(const KirbyDiagram& d, std::size_t a, std::size_t pos_a, std::size_t b, std::size_t pos_b) {
    if (a == b || a >= d.strands.size() || b >= d.strands.size()) throw ValidationError("Reidemeister II needs two strands");
    KirbyDiagram out = d;
    const std::size_t x = out.signs.size();
    out.signs.push_back(1);
    out.signs.push_back(-1);
    detail::insert_passages(out.strands[a], pos_a, {{x, true}, {x + 1, true}});
    detail::insert_passages(out.strands[b], pos_b, {{x, false}, {x + 1, false}});
    return out;
}

/// Clasp: two crossings of the same sign with alternating roles, adding
/// sign to the linking number of the two strands' components.
inline KirbyDiagram add_clasp(const KirbyDiagram& d, std::size_t a, std::size_t pos_a, std::size_t b, std::size_t pos_b,
                              int sign) {
    if (a == b || a >= d.strands.size() || b >= d.strands.size()) throw ValidationError("clasp needs two strands");
    if (sign != 1 && sign != -1) throw ValidationError("clasp sign must be +1 or -1");
    KirbyDiagram out = d;
    const std::size_t x = out.signs.size();
    out.signs.push_back(sign);
    out.signs.push_back(sign);
    detail::insert_passages(out.strands[a], pos_a, {{x, true}, {x + 1, false}});
    detail::insert_passages(out.strands[b], pos_b, {{x, false}, {x + 1, true}});
    return out;
}

/// Reidemeister I: a kink on one strand. Framings are stored as integers
/// independent of the blackboard framing, so they do not change.
inline KirbyDiagram add_kink(const KirbyDiagram& d, std::size_t s, std::size_t pos, int sign = 1) {
    if (s >= d.strands.size()) throw ValidationError("kink on a missing strand");
    if (sign != 1 && sign != -1) throw ValidationError("kink sign must be +1 or -1");
    KirbyDiagram out = d;
    const std::size_t x = out.signs.size();
    out.signs.push_back(sign);
    detail::insert_passages(out.strands[s], pos, {{x, false}, {x, true}});
    return out;
}

inline KirbyDiagram add_unknot(const KirbyDiagram& d, std::int64_t framing) {
    KirbyDiagram out = d;
    out.strands.push_back({});
    out.framings.push_back(framing);
    return out;
}

inline KirbyDiagram add_disc_pair(const KirbyDiagram& d) {
    KirbyDiagram out = d;
    out.disc_pairs.push_back(0);
    return out;
}

/// Pushes a finger of strand s (before passage pos) through disc pair p and
/// back: the strand enters disc 0 at a new position k, runs as a short arc
/// on disc 1 from k to k+1, and resumes from disc 0 at k+1. An isotopy in
/// the boundary of the 1-handlebody, adding one strand.
inline KirbyDiagram slide_over_pair(const KirbyDiagram& d, std::size_t s, std::size_t pos, std::size_t p) {
    if (s >= d.strands.size()) throw ValidationError("slide of a missing strand");
    if (p >= d.disc_pairs.size()) throw ValidationError("slide over a missing disc pair");
    KirbyDiagram out = d;
    const std::size_t k = out.disc_pairs[p];
    out.disc_pairs[p] += 2;
    Strand& st = out.strands[s];
    pos = std::min(pos, st.passages.size());
    const DiscEnd in{p, 0, k}, back_out{p, 0, k + 1};
    Strand finger;
    finger.closed = false;
    finger.start = DiscEnd{p, 1, k};
    finger.end = DiscEnd{p, 1, k + 1};
    if (st.closed) {
        std::rotate(st.passages.begin(), st.passages.begin() + static_cast<std::ptrdiff_t>(pos), st.passages.end());
        st.closed = false;
        st.start = back_out;
        st.end = in;
        out.strands.push_back(finger);
        return out;
    }
    Strand rest;
    rest.closed = false;
    rest.passages.assign(st.passages.begin() + static_cast<std::ptrdiff_t>(pos), st.passages.end());
    rest.start = back_out;
    rest.end = st.end;
    st.passages.resize(pos);
    st.end = in;
    out.strands.push_back(finger);
    out.strands.push_back(rest);
    return out;
}

// ---------------------------------------------------------------------------
// Connectivity and the connecting moves.

/// Pieces of the planar diagram: strands joined by crossings and by sharing
/// a disc pair; a pair without strands is a piece of its own. Returns, per
/// piece, its least strand (or nullopt for an orphan pair).
inline std::vector<std::optional<std::size_t>> diagram_pieces(const KirbyDiagram& d) {
    const std::size_t n = d.strands.size();
    std::vector<std::size_t> parent(n + d.disc_pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::optional<std::size_t>> first_at(d.signs.size());
    for (std::size_t s = 0; s < n; ++s) {
        for (const auto& p : d.strands[s].passages) {
            if (first_at[p.crossing]) detail::unite(parent, s, *first_at[p.crossing]);
            else first_at[p.crossing] = s;
        }
        for (const auto& e : {d.strands[s].start, d.strands[s].end})
            if (e) detail::unite(parent, s, n + e->pair);
    }
    std::vector<std::optional<std::size_t>> out;
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        const auto r = detail::find_root(parent, i);
        if (roots.insert(r).second) out.push_back(i < n ? std::optional<std::size_t>(i) : std::nullopt);
    }
    return out;
}

inline bool is_connected(const KirbyDiagram& d) { return diagram_pieces(d).size() == 1; }

/// Makes the diagram connected with at least one crossing: adds a 1-framed
/// unknot to a diagram without strands, slides the first strand over every
/// pair without strands, joins the remaining pieces by Reidemeister II
/// moves, and adds a kink when no crossing exists.
inline KirbyDiagram connect(const KirbyDiagram& d) {
    d.validate();
    KirbyDiagram out = d;
    if (out.strands.empty()) out = add_unknot(out, 1);
    for (std::size_t p = 0; p < out.disc_pairs.size(); ++p)
        if (out.disc_pairs[p] == 0) out = slide_over_pair(out, 0, 0, p);
    const auto pieces = diagram_pieces(out);
    const std::size_t anchor = *pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) out = add_rii(out, anchor, 0, *pieces[i], 0);
    if (out.signs.empty()) out = add_kink(out, 0, 0, 1);
    return out;
}

struct SphereData {
    std::vector<std::size_t> components;  // 1 or 2; the first is the one normalized
};

/// Handle slides over the 2-handle(s) meeting an embedded sphere in one
/// point each change the framing of the first listed component by +-2 while
/// preserving the link, so each such framing is reduced into {0, 1}.
inline KirbyDiagram slide_normalize_framings(const KirbyDiagram& d, const std::vector<SphereData>& spheres) {
    d.validate();
    KirbyDiagram out = d;
    for (const auto& s : spheres) {
        if (s.components.empty() || s.components.size() > 2) throw ValidationError("a sphere meets one or two components");
        for (auto c : s.components)
            if (c >= out.framings.size()) throw ValidationError("sphere refers to a missing component");
        if (s.components.size() == 2 && s.components[0] == s.components[1])
            throw ValidationError("sphere components must be distinct");
        auto& f = out.framings[s.components[0]];
        f = ((f % 2) + 2) % 2;
    }
    return out;
}

struct DoubledDiagram {
    KirbyDiagram diagram;
    // 0-framed meridians kill no generators and add relations that already
    // hold, so the fundamental group presentation is unchanged.
    bool pi1_preserved = true;
};

/// Double of the 4-dimensional handlebody: a 0-framed meridian clasped
/// around every strand.
inline DoubledDiagram double_diagram(const KirbyDiagram& d) {
    d.validate();
    DoubledDiagram out{d, true};
    const std::size_t n = d.strands.size();
    for (std::size_t s = 0; s < n; ++s) {
        out.diagram = add_unknot(out.diagram, 0);
        out.diagram = add_clasp(out.diagram, out.diagram.strands.size() - 1, 0, s, 0, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linking form.

inline IntMatrix linking_matrix(const KirbyDiagram& d) {
    d.validate();
    if (!d.disc_pairs.empty()) throw OneHandleError();
    const auto comp = d.component_of();
    const std::size_t k = d.framings.size();
    IntMatrix twice(k, std::vector<std::int64_t>(k, 0));
    std::vector<std::array<std::size_t, 2>> at(d.signs.size());
    for (std::size_t s = 0; s < d.strands.size(); ++s)
        for (const auto& p : d.strands[s].passages) at[p.crossing][p.over ? 1 : 0] = comp[s];
    for (std::size_t x = 0; x < d.signs.size(); ++x) {
        const auto [a, b] = at[x];
        if (a == b) continue;
        twice[a][b] += d.signs[x];
        twice[b][a] += d.signs[x];
    }
    IntMatrix m(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) {
                m[i][j] = d.framings[i];
                continue;
            }
            if (twice[i][j] % 2 != 0) throw ValidationError("odd crossing sum between two closed components");
            m[i][j] = twice[i][j] / 2;
        }
    return m;
}

inline UnimodularForm intersection_form(const KirbyDiagram& d) { return classify(linking_matrix(d)); }

}  // namespace topocalc
