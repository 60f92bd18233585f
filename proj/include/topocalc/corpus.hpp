#pragma once

// Seeded corpora of Kirby diagrams and special shadows for bound checking.
// Diagrams grow from the empty diagram by random local constructions
// (unknots, disc pairs, kinks, clasps, Reidemeister II fingers, slides over
// disc pairs); shadows are the special shadows of connected corpus diagrams.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "topocalc/kirby.hpp"
#include "topocalc/shadow.hpp"

namespace topocalc {

/// Exact textual key of a diagram, for deduplication and sorting.
inline std::string diagram_key(const KirbyDiagram& d) {
    std::ostringstream os;
    os << "x";
    for (int s : d.signs) os << (s > 0 ? '+' : '-');
    for (const auto& st : d.strands) {
        os << "|";
        if (st.start) os << st.start->pair << '.' << st.start->side << '.' << st.start->pos << ':';
        for (const auto& p : st.passages) os << p.crossing << (p.over ? 'o' : 'u') << ',';
        if (st.end) os << ':' << st.end->pair << '.' << st.end->side << '.' << st.end->pos;
    }
    os << "|p";
    for (auto k : d.disc_pairs) os << k << ',';
    os << "|f";
    for (auto f : d.framings) os << f << ',';
    return os.str();
}

inline std::string shadow_key(const SpecialShadow& p) {
    std::ostringstream os;
    os << p.vertices << "|";
    for (const auto& e : p.edges) os << (e.ends.empty() ? std::string("o") : std::to_string(e.ends[0]) + "-" + std::to_string(e.ends[1])) << ",";
    for (const auto& r : p.regions) {
        os << "|" << r.gleam_twice << ":";
        for (auto s : r.walk) os << s << ",";
    }
    return os.str();
}

/// A random diagram made of at most `steps` constructions, each kept only
/// while the weight stays within max_weight.
inline KirbyDiagram random_diagram(std::mt19937_64& rng, std::size_t max_weight, std::size_t steps) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto coin = [&] { return pick(2) == 0 ? 1 : -1; };
    KirbyDiagram d;
    for (std::size_t i = 0; i < steps; ++i) {
        KirbyDiagram next = d;
        const std::size_t n = d.strands.size();
        switch (pick(6)) {
            case 0:
                next = add_unknot(d, static_cast<std::int64_t>(pick(7)) - 3);
                break;
            case 1:
                next = add_disc_pair(d);
                break;
            case 2:
                if (n == 0) continue;
                {
                    const auto s = pick(n);
                    next = add_kink(d, s, pick(d.strands[s].passages.size() + 1), coin());
                }
                break;
            case 3:
            case 4:
                if (n < 2) continue;
                {
                    const auto a = pick(n);
                    auto b = pick(n - 1);
                    if (b >= a) ++b;
                    const auto pa = pick(d.strands[a].passages.size() + 1);
                    const auto pb = pick(d.strands[b].passages.size() + 1);
                    next = pick(2) == 0 ? add_clasp(d, a, pa, b, pb, coin()) : add_rii(d, a, pa, b, pb);
                }
                break;
            default:
                if (n == 0 || d.disc_pairs.empty()) continue;
                {
                    const auto s = pick(n);
                    next = slide_over_pair(d, s, pick(d.strands[s].passages.size() + 1), pick(d.disc_pairs.size()));
                }
                break;
        }
        if (next.weight() <= max_weight) d = std::move(next);
    }
    return d;
}

struct CorpusDiagram {
    KirbyDiagram original;
    KirbyDiagram connected;  // connect(original)
};

/// `count` diagrams whose connected forms are pairwise distinct and have
/// weight at most max_weight, sorted by key of the connected form.
inline std::vector<CorpusDiagram> diagram_corpus(std::uint64_t seed, std::size_t count, std::size_t max_weight) {
    std::mt19937_64 rng(seed);
    std::map<std::string, CorpusDiagram> seen;
    for (std::size_t attempt = 0; seen.size() < count && attempt < 200 * count; ++attempt) {
        const auto steps = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        auto d = random_diagram(rng, max_weight, steps);
        auto c = connect(d);
        if (c.weight() > max_weight) continue;
        auto key = diagram_key(c);
        seen.try_emplace(std::move(key), CorpusDiagram{std::move(d), std::move(c)});
    }
    std::vector<CorpusDiagram> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

/// Pairwise distinct special shadows with at most max_vertices vertices,
/// each carrying a layout for its computed cut system.
inline std::vector<SpecialShadow> shadow_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
    std::mt19937_64 rng(seed);
    std::map<std::string, SpecialShadow> seen;
    auto keep = [&](SpecialShadow p) {
        p.layout = compute_layout(p, find_cut_system(p));
        auto key = shadow_key(p);
        seen.try_emplace(std::move(key), std::move(p));
    };
    keep(abalone());
    for (std::size_t attempt = 0; seen.size() < count && attempt < 500 * count; ++attempt) {
        const auto steps = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto d = connect(random_diagram(rng, 3 * max_vertices, steps));
        if (d.signs.size() > max_vertices) continue;
        const auto p = from_kirby(d);
        if (p.vertex_count() <= max_vertices) keep(p);
    }
    std::vector<SpecialShadow> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

}  // namespace topocalc
