#pragma once

// JSON documents for every input and output type. Readers throw SchemaError
// carrying the JSON pointer of the offending node; semantic problems found
// afterwards (a non-geometric graph, a broken PD code) stay ValidationErrors.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "topocalc/decomposition.hpp"
#include "topocalc/errors.hpp"
#include "topocalc/forms.hpp"
#include "topocalc/kirby.hpp"
#include "topocalc/seifert.hpp"
#include "topocalc/shadow.hpp"
#include "topocalc/slope.hpp"
#include "topocalc/sol.hpp"

namespace topocalc::json {

using nlohmann::json;

/// A node together with its JSON pointer.
class Node {
public:
    Node(const json& j, std::string ptr = "") : j_(&j), ptr_(std::move(ptr)) {}

    const json& raw() const { return *j_; }
    const std::string& pointer() const { return ptr_; }
    [[noreturn]] void fail(const std::string& what) const { throw SchemaError(ptr_.empty() ? "/" : ptr_, what); }

    bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

    Node at(const std::string& key) const {
        if (!j_->is_object()) fail("expected an object");
        if (!j_->contains(key)) throw SchemaError(ptr_ + "/" + key, "required field is missing");
        return {(*j_)[key], ptr_ + "/" + escape(key)};
    }

    Node at(std::size_t i) const { return {(*j_)[i], ptr_ + "/" + std::to_string(i)}; }

    std::vector<Node> items() const {
        if (!j_->is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_->size(); ++i) out.push_back(at(i));
        return out;
    }

    std::int64_t integer() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        return j_->get<std::int64_t>();
    }

    std::size_t index() const {
        const auto v = integer();
        if (v < 0) fail("expected a nonnegative integer");
        return static_cast<std::size_t>(v);
    }

    double number() const {
        if (!j_->is_number()) fail("expected a number");
        return j_->get<double>();
    }

    bool boolean() const {
        if (!j_->is_boolean()) fail("expected a boolean");
        return j_->get<bool>();
    }

    std::string string() const {
        if (!j_->is_string()) fail("expected a string");
        return j_->get<std::string>();
    }

    /// Keys of an object in document order.
    std::vector<std::pair<std::string, Node>> entries() const {
        if (!j_->is_object()) fail("expected an object");
        std::vector<std::pair<std::string, Node>> out;
        for (auto it = j_->begin(); it != j_->end(); ++it)
            out.emplace_back(it.key(), Node(it.value(), ptr_ + "/" + escape(it.key())));
        return out;
    }

private:
    static std::string escape(const std::string& k) {
        std::string out;
        for (char c : k) {
            if (c == '~') out += "~0";
            else if (c == '/') out += "~1";
            else out += c;
        }
        return out;
    }

    const json* j_;
    std::string ptr_;
};

inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("not valid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Slopes and matrices.

inline Slope read_slope(const Node& n) {
    try {
        return parse_slope(n.string());
    } catch (const ValidationError& e) {
        n.fail(e.what());
    }
}

inline json write(const Slope& s) { return to_string(s); }

inline SlopeVector read_slopes(const Node& n) {
    SlopeVector out;
    for (const auto& x : n.items()) out.push_back(read_slope(x));
    return out;
}

inline json write(const SlopeVector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(write(s));
    return out;
}

inline Matrix2 read_matrix2(const Node& n) {
    const auto rows = n.items();
    if (rows.size() != 2) n.fail("expected a 2x2 matrix");
    std::int64_t e[2][2];
    for (std::size_t i = 0; i < 2; ++i) {
        const auto cols = rows[i].items();
        if (cols.size() != 2) rows[i].fail("expected two entries");
        for (std::size_t j = 0; j < 2; ++j) e[i][j] = cols[j].integer();
    }
    return {e[0][0], e[0][1], e[1][0], e[1][1]};
}

inline json write(const Matrix2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

inline IntMatrix read_int_matrix(const Node& n) {
    IntMatrix m;
    for (const auto& row : n.items()) {
        std::vector<std::int64_t> r;
        for (const auto& x : row.items()) r.push_back(x.integer());
        m.push_back(std::move(r));
    }
    const auto rows = n.items();
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i].size() != m.size()) rows[i].fail("matrix must be square");
    return m;
}

inline json write(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

inline json write(const Rational& r) { return to_string(r); }

// ---------------------------------------------------------------------------
// Seifert blocks and decomposition graphs.

inline SeifertBlock read_seifert(const Node& n) {
    SeifertBlock b;
    b.base.genus = n.at("genus").integer();
    b.base.orientable = n.has("orientable") ? n.at("orientable").boolean() : true;
    b.base.boundary_count = n.at("boundary").integer();
    if (n.has("fillings")) b.fillings = read_slopes(n.at("fillings"));
    b.open_boundary = b.base.boundary_count - static_cast<std::int64_t>(b.fillings.size());
    if (b.open_boundary < 0) n.at("fillings").fail("more fillings than boundary circles");
    if (n.has("twists"))
        for (const auto& t : n.at("twists").items()) b.section_twists.push_back(t.integer());
    for (std::size_t i = 0; i < b.fillings.size(); ++i)
        if (b.fillings[i].is_infinite()) n.at("fillings").at(i).fail("a filling along the fiber is not a Seifert filling");
    if (!b.section_twists.empty() && static_cast<std::int64_t>(b.section_twists.size()) != b.open_boundary)
        n.at("twists").fail("need one twist per open boundary torus");
    return b;
}

inline json write(const SeifertBlock& b) {
    json out{{"genus", b.base.genus},
             {"orientable", b.base.orientable},
             {"boundary", b.base.boundary_count},
             {"fillings", write(b.fillings)}};
    if (!b.section_twists.empty()) out["twists"] = b.section_twists;
    return out;
}

inline HyperbolicBlock read_hyperbolic(const Node& n) {
    HyperbolicBlock h;
    h.volume = n.at("volume").number();
    for (const auto& c : n.at("cusps").items()) h.preferred_slopes.push_back(read_slopes(c));
    return h;
}

inline BoundaryRef read_ref(const Node& n) {
    const auto xs = n.items();
    if (xs.size() != 2) n.fail("expected [block, torus]");
    return {xs[0].index(), xs[1].index()};
}

inline DecompGraph read_graph(const Node& n) {
    DecompGraph g;
    for (const auto& b : n.at("blocks").items()) {
        const auto type = b.at("type").string();
        if (type == "seifert") g.blocks.emplace_back(read_seifert(b));
        else if (type == "hyperbolic") g.blocks.emplace_back(read_hyperbolic(b));
        else b.at("type").fail("expected \"seifert\" or \"hyperbolic\"");
    }
    if (n.has("edges"))
        for (const auto& e : n.at("edges").items()) {
            GluingEdge edge;
            const auto kind = e.has("kind") ? e.at("kind").string() : std::string("torus");
            if (kind == "klein") edge.surface = GluingEdge::Surface::KleinBottle;
            else if (kind != "torus") e.at("kind").fail("expected \"torus\" or \"klein\"");
            edge.from = read_ref(e.at("from"));
            if (!edge.is_klein()) edge.to = read_ref(e.at("to"));
            edge.matrix = e.has("matrix") ? read_matrix2(e.at("matrix")) : Matrix2{};
            if (e.has("fibers")) {
                const auto f = read_slopes(e.at("fibers"));
                if (f.size() != 2) e.at("fibers").fail("expected two fiber slopes");
                edge.klein_fibers = {f[0], f[1]};
            }
            g.edges.push_back(edge);
        }
    if (n.has("free"))
        for (const auto& r : n.at("free").items()) g.free_boundary.push_back(read_ref(r));
    return g;
}

inline TorusBundleMonodromy read_monodromy(const Node& n) { return {read_matrix2(n.at("monodromy"))}; }

// ---------------------------------------------------------------------------
// Kirby diagrams (PD code).

inline DiscEnd read_disc_end(const Node& n) {
    DiscEnd e{n.at("pair").index(), static_cast<int>(n.at("side").integer()), n.at("pos").index()};
    if (e.side != 0 && e.side != 1) n.at("side").fail("side must be 0 or 1");
    return e;
}

inline json write(const DiscEnd& e) { return {{"pair", e.pair}, {"side", e.side}, {"pos", e.pos}}; }

inline PdDiagram read_pd(const Node& n) {
    PdDiagram pd;
    if (n.has("crossings"))
        for (const auto& c : n.at("crossings").items()) {
            PdCrossing x;
            const auto arcs = c.at("arcs").items();
            if (arcs.size() != 4) c.at("arcs").fail("a crossing has four arcs");
            for (std::size_t i = 0; i < 4; ++i) x.arcs[i] = arcs[i].integer();
            const auto sign = c.at("sign").integer();
            if (sign != 1 && sign != -1) c.at("sign").fail("sign must be +1 or -1");
            x.sign = static_cast<int>(sign);
            pd.crossings.push_back(x);
        }
    if (n.has("strands"))
        for (const auto& s : n.at("strands").items()) {
            PdStrand st;
            for (const auto& a : s.at("arcs").items()) st.arcs.push_back(a.integer());
            if (st.arcs.empty()) s.at("arcs").fail("a strand has at least one arc");
            const bool has_ends = s.has("start") || s.has("end");
            st.closed = s.has("closed") ? s.at("closed").boolean() : !has_ends;
            if (!st.closed) {
                st.start = read_disc_end(s.at("start"));
                st.end = read_disc_end(s.at("end"));
            } else if (has_ends) {
                s.fail("a closed strand has no disc endpoints");
            }
            pd.strands.push_back(std::move(st));
        }
    if (n.has("disc_pairs"))
        for (const auto& p : n.at("disc_pairs").items()) pd.disc_pairs.push_back(p.index());
    if (n.has("framings")) {
        const auto f = n.at("framings");
        if (f.raw().is_array()) {
            const auto xs = f.items();
            for (std::size_t i = 0; i < xs.size(); ++i) pd.framings[i] = xs[i].integer();
        } else {
            for (const auto& [k, v] : f.entries()) {
                std::size_t used = 0;
                std::size_t idx = 0;
                try {
                    idx = std::stoul(k, &used);
                } catch (const std::logic_error&) {
                    used = 0;
                }
                if (used == 0 || used != k.size()) v.fail("framing keys are component indices");
                pd.framings[idx] = v.integer();
            }
        }
    }
    return pd;
}

inline KirbyDiagram read_diagram(const Node& n) { return from_pd(read_pd(n)); }

inline json write(const KirbyDiagram& d) {
    const auto pd = to_pd(d);
    json crossings = json::array();
    for (const auto& c : pd.crossings) crossings.push_back({{"arcs", c.arcs}, {"sign", c.sign}});
    json strands = json::array();
    for (const auto& s : pd.strands) {
        json st{{"arcs", s.arcs}, {"closed", s.closed}};
        if (s.start) st["start"] = write(*s.start);
        if (s.end) st["end"] = write(*s.end);
        strands.push_back(st);
    }
    json framings = json::object();
    for (const auto& [c, f] : pd.framings) framings[std::to_string(c)] = f;
    return {{"crossings", crossings}, {"strands", strands}, {"disc_pairs", pd.disc_pairs}, {"framings", framings}};
}

// ---------------------------------------------------------------------------
// Shadows.

inline std::int64_t read_gleam_twice(const Node& n) {
    if (n.raw().is_number_integer()) return 2 * n.integer();
    const auto s = n.string();
    try {
        std::size_t used = 0;
        const auto slash = s.find('/');
        const auto num = std::stoll(s.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != s.size()) throw std::invalid_argument("trailing");
            return 2 * num;
        }
        if (used != slash || s.substr(slash + 1) != "2") throw std::invalid_argument("denominator");
        return num;
    } catch (const std::logic_error&) {
        n.fail("gleam must be an integer or a half-integer \"k/2\"");
    }
}

inline SpecialShadow read_shadow(const Node& n) {
    SpecialShadow p;
    p.vertices = n.at("vertices").index();
    for (const auto& e : n.at("edges").items()) {
        ShadowEdge edge;
        for (const auto& v : e.at("ends").items()) edge.ends.push_back(v.index());
        if (!edge.ends.empty() && edge.ends.size() != 2) e.at("ends").fail("an edge has two ends or none");
        p.edges.push_back(edge);
    }
    for (const auto& r : n.at("regions").items()) {
        ShadowRegion region;
        for (const auto& s : r.at("walk").items()) region.walk.push_back(s.integer());
        if (r.has("gleam")) region.gleam_twice = read_gleam_twice(r.at("gleam"));
        p.regions.push_back(std::move(region));
    }
    if (n.has("layout") && !n.at("layout").raw().is_null()) {
        ShadowLayout layout;
        for (const auto& v : n.at("layout").items()) {
            const auto xs = v.items();
            if (xs.size() != 4) v.fail("a vertex rotation lists four edge ends");
            layout.push_back({xs[0].index(), xs[1].index(), xs[2].index(), xs[3].index()});
        }
        p.layout = layout;
    }
    if (n.has("gleam_convention")) p.gleam_convention = n.at("gleam_convention").string();
    return p;
}

inline json write(const SpecialShadow& p) {
    json edges = json::array();
    for (const auto& e : p.edges) edges.push_back({{"ends", e.ends}});
    json regions = json::array();
    for (const auto& r : p.regions) regions.push_back({{"walk", r.walk}, {"gleam", gleam_to_string(r.gleam_twice)}});
    json out{{"vertices", p.vertices}, {"edges", edges}, {"regions", regions}, {"gleam_convention", p.gleam_convention}};
    if (p.layout) out["layout"] = *p.layout;
    return out;
}

inline CutSystem read_cuts(const Node& n) {
    CutSystem c;
    for (const auto& e : n.items()) c.edges.push_back(e.index());
    return c;
}

// ---------------------------------------------------------------------------
// Reports.

inline json write(const UnimodularForm& f) {
    return {{"rank", f.rank},
            {"signature", f.signature()},
            {"positive", f.positive},
            {"negative", f.negative},
            {"parity", f.even ? "even" : "odd"},
            {"kind", to_string(f.kind)},
            {"canonical", f.canonical()},
            {"manifold", f.manifold()},
            {"rohlin", f.rohlin()},
            {"orientation_reversed", f.orientation_reversed}};
}

inline json write(const FilledResult& r) {
    json out{{"kind", to_string(r.kind)}, {"block", write(r.block)}, {"flat_tie", r.flat_tie}};
    if (r.kind == FilledResult::Kind::LensSpace) out["lens_order"] = r.lens_order;
    return out;
}

}  // namespace topocalc::json
