// topocalc: command-line front end. Every subcommand writes one JSON
// document (or a key/value table with --format table). Exit status: 0 ok,
// 1 bound violations found by `corpus run`, 2 invalid input or usage,
// 3 schema error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "topocalc/corpus.hpp"
#include "topocalc/decomposition.hpp"
#include "topocalc/forms.hpp"
#include "topocalc/json_io.hpp"
#include "topocalc/kirby.hpp"
#include "topocalc/seifert.hpp"
#include "topocalc/shadow.hpp"
#include "topocalc/slope.hpp"
#include "topocalc/sol.hpp"

namespace tc = topocalc;
namespace tj = topocalc::json;
using nlohmann::json;

namespace {

struct Io {
    std::string input = "-";
    std::string output = "-";
    std::string format = "json";
};

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tc::ValidationError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render(const json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    std::ostringstream os;
    std::size_t width = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
            os << it.key() << ":\n";
            for (const auto& row : it.value()) {
                os << "  ";
                bool first = true;
                for (auto c = row.begin(); c != row.end(); ++c) {
                    os << (first ? "" : "  ") << c.key() << "=" << cell(c.value());
                    first = false;
                }
                os << "\n";
            }
            continue;
        }
        os << it.key() << std::string(width - it.key().size() + 2, ' ') << cell(it.value()) << "\n";
    }
    return os.str();
}

void emit(const Io& io, const json& doc) {
    const auto text = render(doc, io.format);
    if (io.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(io.output, std::ios::binary);
    if (!out) throw tc::ValidationError("cannot write " + io.output);
    out << text;
}

json input_json(const Io& io) { return tj::parse(read_all(io.input)); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::int64_t to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw tc::ValidationError("not an integer: '" + s + "'");
    }
}

tc::Rational parse_rational(const std::string& s) {
    const auto slope = tc::parse_slope(s);
    return slope.value();
}

std::size_t workers() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TOPOCALC_WORKERS")) {
        const auto cap = to_int(env);
        if (cap < 1) throw tc::ValidationError("TOPOCALC_WORKERS must be positive");
        n = std::min(n, static_cast<std::size_t>(cap));
    }
    return n;
}

// Runs f(i) for i in [0, n) over the worker pool; results land by index.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < std::min(workers(), n); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

void add_io(CLI::App* cmd, Io& io, bool with_input) {
    if (with_input) cmd->add_option("-i,--input,input", io.input, "input file, - for stdin");
    cmd->add_option("-o,--output", io.output, "output file, - for stdout");
    cmd->add_option("--format", io.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

// ---------------------------------------------------------------------------
// Corpus checks.

struct Check {
    std::string name;
    std::size_t cases = 0;
    std::size_t violations = 0;
};

json corpus_run(std::uint64_t seed, std::size_t max_weight, std::size_t diagram_count, std::size_t shadow_count) {
    const auto diagrams = tc::diagram_corpus(seed, diagram_count, max_weight);
    const auto shadows = tc::shadow_corpus(seed, shadow_count, 6);

    struct DiagramResult {
        bool connect_ok = true, special = true, vertices_ok = true, double_ok = true, round_trip_ok = true;
        std::size_t vertices = 0;
    };
    const auto dres = parallel_map<DiagramResult>(diagrams.size(), [&](std::size_t i) {
        const auto& [d, c] = diagrams[i];
        DiagramResult r;
        const auto n = d.weight();
        r.connect_ok = tc::is_connected(c) && !c.signs.empty() && (n == 0 || c.weight() <= 3 * n);
        const auto p = tc::from_kirby(c);
        r.special = tc::is_special(p);
        r.vertices = p.vertex_count();
        r.vertices_ok = p.vertex_count() <= 3 * c.weight() && (n == 0 || p.vertex_count() <= 3 * n);
        r.double_ok = tc::double_diagram(d).diagram.weight() <= 4 * n &&
                      tc::double_diagram(c).diagram.weight() <= 4 * c.weight();
        const auto back = tc::to_kirby(p, tc::find_cut_system(p));
        r.round_trip_ok = back.weight() <= 27 * std::max<std::size_t>(n, 1) + 8;
        return r;
    });
    struct ShadowResult {
        bool strands_ok = true, discs_ok = true, weight_ok = true, crossings_ok = true;
        std::size_t weight = 0;
    };
    const auto sres = parallel_map<ShadowResult>(shadows.size(), [&](std::size_t i) {
        const auto& p = shadows[i];
        const auto n = p.vertex_count();
        const auto d = tc::to_kirby(p, tc::find_cut_system(p));
        return ShadowResult{d.strands.size() == 3 * (n + 1), d.disc_count() == 2 * (n + 1), d.weight() <= 9 * n + 8,
                            d.signs.size() <= 4 * n + 3, d.weight()};
    });

    std::vector<Check> checks{{"connect: connected, >= 1 crossing, weight <= 3n"},
                              {"from_kirby: special"},
                              {"from_kirby: vertices <= 3n"},
                              {"double: weight <= 4n"},
                              {"round trip: weight <= 27n+8"},
                              {"to_kirby: strands = 3(n+1)"},
                              {"to_kirby: discs = 2(n+1)"},
                              {"to_kirby: weight <= 9n+8"},
                              {"to_kirby: crossings <= 4n+3"}};
    auto tally = [](Check& c, bool ok) {
        ++c.cases;
        c.violations += !ok;
    };
    std::size_t max_vertices = 0;
    for (const auto& r : dres) {
        tally(checks[0], r.connect_ok);
        tally(checks[1], r.special);
        tally(checks[2], r.vertices_ok);
        tally(checks[3], r.double_ok);
        tally(checks[4], r.round_trip_ok);
        max_vertices = std::max(max_vertices, r.vertices);
    }
    std::size_t max_shadow_weight = 0;
    for (const auto& r : sres) {
        tally(checks[5], r.strands_ok);
        tally(checks[6], r.discs_ok);
        tally(checks[7], r.weight_ok);
        tally(checks[8], r.crossings_ok);
        max_shadow_weight = std::max(max_shadow_weight, r.weight);
    }
    json rows = json::array();
    std::size_t total = 0;
    for (const auto& c : checks) {
        rows.push_back({{"check", c.name}, {"cases", c.cases}, {"violations", c.violations}});
        total += c.violations;
    }
    return {{"seed", seed},
            {"max_weight", max_weight},
            {"diagrams", diagrams.size()},
            {"shadows", shadows.size()},
            {"max_shadow_vertices", max_vertices},
            {"max_to_kirby_weight", max_shadow_weight},
            {"checks", rows},
            {"violations", total}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calculators for slopes, Seifert fillings, decomposition graphs, Kirby diagrams, shadows and forms"};
    app.require_subcommand(1);
    Io io;
    std::function<int()> action;
    auto run = [&](CLI::App* cmd, std::function<int()> f) { cmd->callback([&action, f] { action = f; }); };

    // slope
    auto* slope = app.add_subcommand("slope", "slope arithmetic")->require_subcommand(1);
    std::string sa, sb;
    auto* dist = slope->add_subcommand("dist", "distance |ps - qr| of two slopes q/p and s/r");
    dist->add_option("a", sa)->required();
    dist->add_option("b", sb)->required();
    add_io(dist, io, false);
    run(dist, [&] {
        const auto d = tc::distance(tc::parse_slope(sa), tc::parse_slope(sb));
        emit(io, {{"a", tc::to_string(tc::parse_slope(sa))}, {"b", tc::to_string(tc::parse_slope(sb))}, {"distance", d}});
        return 0;
    });
    std::vector<std::string> twist_vec;
    std::size_t ti = 0, tjx = 1;
    int tsign = 1;
    auto* twist = slope->add_subcommand("twist", "annulus twist of a slope vector");
    twist->add_option("slopes", twist_vec)->required();
    twist->add_option("--i", ti, "first torus")->required();
    twist->add_option("--j", tjx, "second torus")->required();
    twist->add_option("--sign", tsign)->check(CLI::IsMember({-1, 1}));
    add_io(twist, io, false);
    run(twist, [&] {
        tc::SlopeVector v;
        for (const auto& s : twist_vec) v.push_back(tc::parse_slope(s));
        emit(io, {{"input", tj::write(v)}, {"result", tj::write(tc::annulus_twist(v, ti, tjx, tsign))}});
        return 0;
    });

    // seifert
    auto* seifert = app.add_subcommand("seifert", "Seifert fibered blocks")->require_subcommand(1);
    auto* chi = seifert->add_subcommand("chi", "orbifold Euler characteristic of the base");
    add_io(chi, io, true);
    run(chi, [&] {
        const auto j = input_json(io);
        const auto b = tj::read_seifert(j);
        b.validate();
        emit(io, {{"chi", tj::write(tc::chi_orbifold(b))}});
        return 0;
    });
    auto* euler = seifert->add_subcommand("euler", "Euler number");
    add_io(euler, io, true);
    run(euler, [&] {
        const auto j = input_json(io);
        const auto b = tj::read_seifert(j);
        emit(io, {{"euler", tj::write(tc::euler_number(b))}, {"lift", tj::write(tc::euler_lift(b))}});
        return 0;
    });
    std::string fill_slopes;
    bool allow_fiber = false;
    auto* fill = seifert->add_subcommand("fill", "Dehn filling of the open boundary tori");
    add_io(fill, io, true);
    fill->add_option("--slopes", fill_slopes, "comma-separated slopes, one per open torus")->required();
    fill->add_flag("--allow-fiber", allow_fiber, "permit filling along the fiber");
    run(fill, [&] {
        const auto j = input_json(io);
        const auto b = tj::read_seifert(j);
        tc::SlopeVector v;
        for (const auto& s : split(fill_slopes, ',')) v.push_back(tc::parse_slope(s));
        const auto r = tc::fill(b, v, allow_fiber);
        auto out = tj::write(r);
        if (r.kind != tc::FilledResult::Kind::GenericSeifert) out["pi1_order"] = tc::pi1_order(r);
        emit(io, out);
        return 0;
    });

    // decomp
    auto* decomp = app.add_subcommand("decomp", "geometric decomposition graphs")->require_subcommand(1);
    auto* validate = decomp->add_subcommand("validate", "structural and geometric checks");
    add_io(validate, io, true);
    run(validate, [&] {
        const auto j = input_json(io);
        const auto g = tj::read_graph(j);
        g.validate();
        const auto rep = tc::validate_geometric(g);
        emit(io, {{"geometric", rep.geometric}, {"violations", rep.violations}});
        return 0;
    });
    auto* vol = decomp->add_subcommand("vol", "generalized volume");
    add_io(vol, io, true);
    run(vol, [&] {
        const auto j = input_json(io);
        emit(io, {{"volume", tc::volume(tj::read_graph(j))}});
        return 0;
    });
    auto* eul = decomp->add_subcommand("euler", "generalized Euler number");
    add_io(eul, io, true);
    run(eul, [&] {
        const auto j = input_json(io);
        emit(io, {{"euler", tc::euler_invariant(tj::read_graph(j))}});
        return 0;
    });
    std::string mono;
    auto* sol = decomp->add_subcommand("sol-e", "Euler invariant of a torus bundle");
    sol->add_option("--monodromy", mono, "a,b,c,d row by row");
    add_io(sol, io, true);
    run(sol, [&] {
        tc::TorusBundleMonodromy m;
        if (!mono.empty()) {
            const auto xs = split(mono, ',');
            if (xs.size() != 4) throw tc::ValidationError("monodromy needs four entries");
            m.psi = {to_int(xs[0]), to_int(xs[1]), to_int(xs[2]), to_int(xs[3])};
        } else {
            const auto j = input_json(io);
            m = tj::read_monodromy(j);
        }
        emit(io, {{"monodromy", tj::write(m.psi)}, {"anosov", m.is_anosov()}, {"e", tc::sol_torus_bundle_e(m)}});
        return 0;
    });
    std::string bound = "1";
    std::int64_t max_den = 12;
    auto* vols = decomp->add_subcommand("vols-enum", "Seifert volume set below a bound");
    vols->add_option("--bound", bound, "positive rational")->required();
    vols->add_option("--max-denominator", max_den, "cap on exceptional fiber orders");
    add_io(vols, io, false);
    run(vols, [&] {
        const auto values = tc::vol_S_enumerate(parse_rational(bound), max_den);
        json rows = json::array();
        for (const auto& w : values)
            rows.push_back({{"value", tj::write(w.value)}, {"n", w.n}, {"denominators", w.denominators}});
        emit(io, {{"bound", bound}, {"max_denominator", max_den}, {"count", values.size()}, {"values", rows}});
        return 0;
    });

    // kirby
    auto* kirby = app.add_subcommand("kirby", "Kirby diagrams in planar diagram code")->require_subcommand(1);
    auto* kw = kirby->add_subcommand("weight", "crossings + discs + strands");
    add_io(kw, io, true);
    run(kw, [&] {
        const auto j = input_json(io);
        const auto d = tj::read_diagram(j);
        emit(io, {{"weight", d.weight()},
                  {"crossings", d.crossing_count()},
                  {"discs", d.disc_count()},
                  {"strands", d.strands.size()},
                  {"components", d.component_count()},
                  {"connected", tc::is_connected(d)}});
        return 0;
    });
    auto* kc = kirby->add_subcommand("connect", "make the diagram connected with a crossing");
    add_io(kc, io, true);
    run(kc, [&] {
        const auto j = input_json(io);
        const auto d = tj::read_diagram(j);
        const auto c = tc::connect(d);
        emit(io, {{"diagram", tj::write(c)}, {"weight_before", d.weight()}, {"weight", c.weight()}});
        return 0;
    });
    std::vector<std::string> spheres;
    auto* ks = kirby->add_subcommand("slide", "reduce framings through declared spheres");
    ks->add_option("--sphere", spheres, "components met by a sphere, e.g. 0 or 0,1 (repeatable)")->required();
    add_io(ks, io, true);
    run(ks, [&] {
        const auto j = input_json(io);
        const auto d = tj::read_diagram(j);
        std::vector<tc::SphereData> data;
        for (const auto& s : spheres) {
            tc::SphereData sd;
            for (const auto& c : split(s, ',')) {
                const auto v = to_int(c);
                if (v < 0) throw tc::ValidationError("component index must be nonnegative");
                sd.components.push_back(static_cast<std::size_t>(v));
            }
            data.push_back(sd);
        }
        emit(io, {{"diagram", tj::write(tc::slide_normalize_framings(d, data))}});
        return 0;
    });
    auto* kd = kirby->add_subcommand("double", "double of the handlebody");
    add_io(kd, io, true);
    run(kd, [&] {
        const auto j = input_json(io);
        const auto d = tj::read_diagram(j);
        const auto dd = tc::double_diagram(d);
        emit(io, {{"diagram", tj::write(dd.diagram)},
                  {"pi1_preserved", dd.pi1_preserved},
                  {"weight_before", d.weight()},
                  {"weight", dd.diagram.weight()}});
        return 0;
    });
    std::string framing;
    auto* kf = kirby->add_subcommand("form", "intersection form of a diagram without 1-handles");
    kf->add_option("--framing", framing, "comma-separated framings overriding the file's");
    add_io(kf, io, true);
    run(kf, [&] {
        const auto j = input_json(io);
        auto d = tj::read_diagram(j);
        if (!framing.empty()) {
            const auto xs = split(framing, ',');
            if (xs.size() != d.framings.size())
                throw tc::ValidationError("--framing needs one value per component (" +
                                          std::to_string(d.framings.size()) + ")");
            for (std::size_t i = 0; i < xs.size(); ++i) d.framings[i] = to_int(xs[i]);
        }
        const auto m = tc::linking_matrix(d);
        const auto f = tc::classify(m);
        auto out = tj::write(f);
        out["matrix"] = tj::write(m);
        out["summary"] = f.manifold().empty() ? f.canonical() : f.canonical() + " (" + f.manifold() + ")";
        emit(io, out);
        return 0;
    });

    // shadow
    auto* shadow = app.add_subcommand("shadow", "special shadows")->require_subcommand(1);
    auto* sc = shadow->add_subcommand("check", "specialness check");
    add_io(sc, io, true);
    run(sc, [&] {
        const auto j = input_json(io);
        const auto p = tj::read_shadow(j);
        const auto c = tc::check_special(p);
        emit(io, {{"special", c.special}, {"vertices", p.vertex_count()}, {"violations", c.violations}});
        return 0;
    });
    bool do_connect = false;
    auto* sf = shadow->add_subcommand("from-kirby", "special shadow of a connected Kirby diagram");
    sf->add_flag("--connect", do_connect, "apply connect first");
    add_io(sf, io, true);
    run(sf, [&] {
        const auto j = input_json(io);
        auto d = tj::read_diagram(j);
        if (do_connect) d = tc::connect(d);
        const auto p = tc::from_kirby(d);
        emit(io, {{"shadow", tj::write(p)}, {"vertices", p.vertex_count()}, {"diagram_weight", d.weight()}});
        return 0;
    });
    std::string cuts_arg;
    auto* st = shadow->add_subcommand("to-kirby", "Kirby diagram of a special shadow");
    st->add_option("--cuts", cuts_arg, "comma-separated cut edges (default: computed)");
    add_io(st, io, true);
    run(st, [&] {
        const auto j = input_json(io);
        const auto p = tj::read_shadow(j);
        tc::CutSystem cuts;
        if (cuts_arg.empty()) {
            cuts = tc::find_cut_system(p);
        } else {
            for (const auto& c : split(cuts_arg, ',')) {
                const auto v = to_int(c);
                if (v < 0) throw tc::ValidationError("edge index must be nonnegative");
                cuts.edges.push_back(static_cast<std::size_t>(v));
            }
        }
        const auto d = tc::to_kirby(p, cuts);
        emit(io, {{"diagram", tj::write(d)},
                  {"cuts", cuts.edges},
                  {"vertices", p.vertex_count()},
                  {"weight", d.weight()},
                  {"strands", d.strands.size()},
                  {"discs", d.disc_count()},
                  {"crossings", d.crossing_count()}});
        return 0;
    });

    // forms
    auto* forms = app.add_subcommand("forms", "unimodular forms")->require_subcommand(1);
    auto* fc = forms->add_subcommand("classify", "classify a symmetric integer matrix");
    add_io(fc, io, true);
    run(fc, [&] {
        const auto j = input_json(io);
        const tj::Node root(j);
        const auto m = tj::read_int_matrix(root.has("matrix") ? root.at("matrix") : root);
        emit(io, tj::write(tc::classify(m)));
        return 0;
    });
    std::int64_t rank = 0;
    auto* fcount = forms->add_subcommand("count", "forms of one rank");
    fcount->add_option("n", rank)->required();
    add_io(fcount, io, false);
    run(fcount, [&] {
        const auto c = tc::count_forms(rank);
        emit(io, {{"rank", rank}, {"odd", c.odd}, {"even", c.even}, {"odd_closed_form", c.odd_ceiling},
                  {"even_closed_form", c.even_ceiling}});
        return 0;
    });
    auto* fb = forms->add_subcommand("bounds", "cardinality bounds up to a rank");
    fb->add_option("n", rank)->required();
    add_io(fb, io, false);
    run(fb, [&] {
        const auto upper = tc::count_Un_homeo_bound(rank);
        const auto lower = tc::count_simply_connected_lower(rank);
        const double n2 = static_cast<double>(rank) * static_cast<double>(rank);
        emit(io, {{"rank", rank},
                  {"upper", upper},
                  {"upper_over_n2", static_cast<double>(upper) / n2},
                  {"upper_below_5_16_n2", 16 * upper < 5 * rank * rank},
                  {"lower", lower},
                  {"lower_at_least_n2_4", 4 * lower >= rank * rank}});
        return 0;
    });

    // corpus
    auto* corpus = app.add_subcommand("corpus", "generated corpora and bound checks")->require_subcommand(1);
    std::uint64_t seed = 1;
    std::size_t max_weight = 12, count = 500, shadow_count = 100;
    std::string kind = "diagrams";
    auto* cg = corpus->add_subcommand("generate", "write a corpus as JSON");
    cg->add_option("--kind", kind)->check(CLI::IsMember({"diagrams", "shadows"}));
    cg->add_option("--seed", seed);
    cg->add_option("--max-weight", max_weight, "diagram weight cap");
    cg->add_option("--count", count);
    add_io(cg, io, false);
    run(cg, [&] {
        json items = json::array();
        if (kind == "diagrams") {
            for (const auto& c : tc::diagram_corpus(seed, count, max_weight))
                items.push_back({{"original", tj::write(c.original)}, {"connected", tj::write(c.connected)}});
        } else {
            for (const auto& p : tc::shadow_corpus(seed, count, 6)) items.push_back(tj::write(p));
        }
        emit(io, {{"kind", kind}, {"seed", seed}, {"count", items.size()}, {"items", items}});
        return 0;
    });
    auto* cr = corpus->add_subcommand("run", "check every conversion bound on generated corpora");
    cr->add_option("--seed", seed);
    cr->add_option("--max-weight", max_weight, "diagram weight cap");
    cr->add_option("--count", count, "diagram corpus size");
    cr->add_option("--shadows", shadow_count, "shadow corpus size");
    add_io(cr, io, false);
    run(cr, [&] {
        const auto report = corpus_run(seed, max_weight, count, shadow_count);
        emit(io, report);
        return report["violations"].get<std::size_t>() == 0 ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const tc::SchemaError& e) {
        std::cerr << json{{"error", "schema"}, {"pointer", e.pointer()}, {"message", e.what()}}.dump() << "\n";
        return 3;
    } catch (const tc::ValidationError& e) {
        std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}
