// npc: command-line front-end. JSON goes to stdout; exit code 0 = pass,
// 1 = a check failed, 2 = error.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "npc/complex.hpp"
#include "npc/diagram.hpp"
#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/io.hpp"
#include "npc/metric.hpp"
#include "npc/sap.hpp"
#include "npc/smallcancel.hpp"
#include "npc/suite.hpp"
#include "npc/wsys.hpp"

using namespace npc;

namespace {

int exit_code = 0;

void emit(const json& j, const std::string& out = "") {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(out, j);
    }
}

void emit_report(const CheckReport& r, const std::string& out = "") {
    emit(to_json(r), out);
    if (!r.passed()) exit_code = 1;
}

std::vector<VertexId> parse_ids(const std::string& s) {
    std::vector<VertexId> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<VertexId>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidArgument, "not a vertex list: " + s);
        }
    }
    return out;
}

OrientedGeodesic geodesic_arg(const Complex& c, const std::string& s) { return certify_geodesic(c, parse_ids(s)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonpositive-curvature verification toolkit"};
    app.require_subcommand(1);
    std::string file, file2, out, method = "4pt", backend = "structured", loop, g1, g2, word;
    VertexId u = 0, v = 0, w = 0;
    std::size_t cap = kDefaultGeodesicCap;
    int area_cap = 32, n_edges = 1, radius = 2, big_n = 14;
    bool local = false, exhaustive = false;
    std::size_t samples = 0;
    int max_perimeter = 8;

    auto* distance_cmd = app.add_subcommand("distance", "Graph distance between two vertices");
    auto* interval_cmd = app.add_subcommand("interval", "Interval I(u,v)");
    auto* geodesics_cmd = app.add_subcommand("geodesics", "All geodesics from u to v");
    for (auto* c : {distance_cmd, interval_cmd, geodesics_cmd}) {
        c->add_option("file", file, "complex file")->required();
        c->add_option("u", u)->required();
        c->add_option("v", v)->required();
    }
    geodesics_cmd->add_option("--cap", cap, "maximum number of geodesics");
    auto* delta_cmd = app.add_subcommand("delta", "Hyperbolicity constant");
    delta_cmd->add_option("file", file)->required();
    delta_cmd->add_option("--method", method)->check(CLI::IsMember({"slim", "4pt"}));

    auto* wsys_cmd = app.add_subcommand("check-wsys", "Weak systolicity, conditions (E) and (V)");
    wsys_cmd->add_option("file", file)->required();
    wsys_cmd->add_flag("--local", local, "radii 1..3 only");
    auto* systolic_cmd = app.add_subcommand("check-systolic", "6-largeness of a flag complex");
    systolic_cmd->add_option("file", file)->required();
    auto* bigon_cmd = app.add_subcommand("fill-bigon", "Fill a geodesic bigon");
    bigon_cmd->add_option("file", file)->required();
    bigon_cmd->add_option("--g1", g1)->required();
    bigon_cmd->add_option("--g2", g2)->required();
    bigon_cmd->add_option("--backend", backend)->check(CLI::IsMember({"structured", "oracle"}));
    bigon_cmd->add_option("-o,--out", out);
    auto* triangle_cmd = app.add_subcommand("fill-triangle", "Fill a geodesic triangle");
    triangle_cmd->add_option("file", file)->required();
    triangle_cmd->add_option("u", u)->required();
    triangle_cmd->add_option("v", v)->required();
    triangle_cmd->add_option("w", w)->required();
    triangle_cmd->add_option("-o,--out", out);

    auto* pieces_cmd = app.add_subcommand("pieces", "Pieces of a complex or presentation");
    pieces_cmd->add_option("file", file)->required();
    auto* c16_cmd = app.add_subcommand("check-c16", "C'(1/6) small cancellation");
    c16_cmd->add_option("file", file)->required();
    auto* dehn_cmd = app.add_subcommand("dehn", "Dehn reduction of a word");
    dehn_cmd->add_option("file", file, "presentation file")->required();
    dehn_cmd->add_option("word", word)->required();

    auto* diagram_cmd = app.add_subcommand("diagram", "Disc diagram tools");
    diagram_cmd->require_subcommand(1);
    auto* dvalidate = diagram_cmd->add_subcommand("validate", "Planar and cell-map validation");
    dvalidate->add_option("file", file)->required();
    dvalidate->add_option("--complex", file2, "target complex");
    auto* dclassify = diagram_cmd->add_subcommand("classify", "Single cell, ladder or three shells/spurs");
    dclassify->add_option("file", file)->required();
    auto* dgb = diagram_cmd->add_subcommand("gauss-bonnet", "Defect audit of a triangulated diagram");
    dgb->add_option("file", file)->required();
    auto* fill_cmd = app.add_subcommand("fill", "Minimal-area reduced diagram for a loop");
    fill_cmd->add_option("file", file)->required();
    fill_cmd->add_option("--loop", loop)->required();
    fill_cmd->add_option("--cap", area_cap);
    fill_cmd->add_option("-o,--out", out);

    auto* sap_cmd = app.add_subcommand("sap", "Small Angle Property probe");
    sap_cmd->add_option("file", file)->required();
    sap_cmd->add_option("--n", n_edges, "edges of K");
    sap_cmd->add_option("--radius", radius);
    sap_cmd->add_option("--cap", cap, "geodesic count cap");
    sap_cmd->add_option("--N", big_n, "tightness constant; bound n*N^2");
    sap_cmd->add_option("--json", out, "write the probe here");
    auto* hex_cmd = app.add_subcommand("tight-hex", "Tightness of hexagon fillings");
    hex_cmd->add_option("file", file)->required();
    hex_cmd->add_option("--N", big_n);
    hex_cmd->add_option("--samples", samples);
    hex_cmd->add_flag("--exhaustive", exhaustive);
    hex_cmd->add_option("--max-perimeter", max_perimeter);

    auto* gen_cmd = app.add_subcommand("gen", "Generate fixtures");
    gen_cmd->require_subcommand(1);
    int r = 2, k = 4, p = 2, q = 2, branching = 2, depth = 3, genus = 2, steps = 20;
    std::uint64_t seed = 1;
    std::string ladder_file;
    auto* g_disc = gen_cmd->add_subcommand("equilateral-disc", "Ball in the equilateral triangulation");
    g_disc->add_option("--r", r);
    auto* g_tree = gen_cmd->add_subcommand("tree", "Rooted tree");
    g_tree->add_option("--branching", branching);
    g_tree->add_option("--depth", depth);
    auto* g_poly = gen_cmd->add_subcommand("polygon", "Single k-gon");
    g_poly->add_option("--k", k);
    auto* g_cycle = gen_cmd->add_subcommand("cycle", "k-cycle graph");
    g_cycle->add_option("--k", k);
    auto* g_par = gen_cmd->add_subcommand("parallelogram", "Flat p x q parallelogram");
    g_par->add_option("--p", p);
    g_par->add_option("--q", q);
    auto* g_join = gen_cmd->add_subcommand("join-lines", "Join of two lines");
    g_join->add_option("--r", r);
    auto* g_cayley = gen_cmd->add_subcommand("cayley-ball", "Cayley complex ball");
    g_cayley->add_option("--genus", genus, "surface group presentation");
    g_cayley->add_option("--presentation", file2, "presentation file instead of --genus");
    g_cayley->add_option("--r", r);
    auto* g_surface = gen_cmd->add_subcommand("surface", "Surface group presentation");
    g_surface->add_option("--genus", genus);
    auto* g_ladder = gen_cmd->add_subcommand("ladder", "Ladder diagram from a spec file");
    g_ladder->add_option("spec", ladder_file)->required();
    auto* g_random = gen_cmd->add_subcommand("random-disc", "Random triangulated disc diagram");
    g_random->add_option("--steps", steps);
    g_random->add_option("--seed", seed);
    for (auto* g : gen_cmd->get_subcommands({})) g->add_option("-o,--out", out);

    auto* suite_cmd = app.add_subcommand("suite", "Run a suite config");
    suite_cmd->add_option("config", file)->required();
    app.add_subcommand("version", "Print the tool version");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*distance_cmd) {
            const auto c = load_complex(file);
            emit({{"u", u}, {"v", v}, {"distance", distance(c, u, v)}});
        } else if (*interval_cmd) {
            emit(to_json(interval(load_complex(file), u, v)));
        } else if (*geodesics_cmd) {
            const auto gs = enumerate_geodesics(load_complex(file), u, v, cap);
            json list = json::array();
            for (const auto& g : gs) list.push_back(g.vertices);
            emit({{"u", u}, {"v", v}, {"count", gs.size()}, {"geodesics", list}});
        } else if (*delta_cmd) {
            emit(to_json(delta_estimate(load_complex(file), method == "slim" ? DeltaMethod::SlimTriangles : DeltaMethod::FourPoint)));
        } else if (*wsys_cmd) {
            const auto c = load_complex(file);
            emit_report((local ? check_locally(c) : check_weakly_systolic(c)).to_report());
        } else if (*systolic_cmd) {
            emit_report(check_systolic(load_complex(file)));
        } else if (*bigon_cmd) {
            const auto c = load_complex(file);
            auto d = fill_bigon(c, geodesic_arg(c, g1), geodesic_arg(c, g2), backend == "oracle" ? BigonBackend::Oracle : BigonBackend::Structured);
            d.target = file;
            emit(to_json(d), out);
        } else if (*triangle_cmd) {
            const auto c = load_complex(file);
            try {
                auto d = fill_triangle(c, u, v, w);
                d.target = file;
                emit(to_json(d), out);
            } catch (const BoundViolation& e) {
                emit({{"error", "BoundViolated"}, {"message", e.message()}, {"diagram", to_json(e.diagram())}});
                return 1;
            }
        } else if (*pieces_cmd || *c16_cmd) {
            const json j = read_json_file(file);
            const bool presentation = has_format(j, "npc-presentation");
            if (*pieces_cmd) {
                const auto ps = presentation ? enumerate_pieces_presentation(presentation_from_json(j)) : enumerate_pieces_complex(complex_from_json(j));
                json list = json::array();
                for (const auto& piece : ps) list.push_back(to_json(piece));
                emit({{"count", ps.size()}, {"pieces", list}});
            } else {
                emit_report(presentation ? to_report(check_c16_presentation(presentation_from_json(j)), "c16_presentation")
                                         : to_report(check_c16_complex(complex_from_json(j)), "c16_complex"));
            }
        } else if (*dehn_cmd) {
            const DehnSolver solver(load_presentation(file));
            const auto reduced = solver.reduce(word);
            emit({{"word", word}, {"reduced", reduced}, {"trivial", reduced.empty()}});
        } else if (*dvalidate) {
            const auto d = load_diagram(file);
            emit_report(file2.empty() ? validate_planar(d) : validate_diagram(d, load_complex(file2)));
        } else if (*dclassify) {
            emit(to_json(classify(load_diagram(file))));
        } else if (*dgb) {
            const auto t = gauss_bonnet_audit(load_diagram(file));
            emit(to_json(t));
            if (!t.passed()) exit_code = 1;
        } else if (*fill_cmd) {
            auto d = reduced_diagram_search(load_complex(file), parse_ids(loop), area_cap);
            d.target = file;
            emit(to_json(d), out);
        } else if (*sap_cmd) {
            const auto probe = sap_probe(load_complex(file), n_edges, radius, cap);
            if (!out.empty()) write_json_file(out, to_json(probe));
            auto rep = verify_sap_bound(probe, big_n);
            rep.stats["probe"] = to_json(probe);
            emit_report(rep);
        } else if (*hex_cmd) {
            HexagonSampling spec;
            spec.max_perimeter = max_perimeter;
            spec.exhaustive = exhaustive || samples == 0;
            spec.samples = samples;
            emit_report(tight_hexagon_probe(load_complex(file), big_n, spec));
        } else if (*gen_cmd) {
            json j;
            if (*g_disc) j = to_json(gen_equilateral_disc(r));
            if (*g_tree) j = to_json(gen_tree(branching, depth));
            if (*g_poly) j = to_json(gen_polygon(k));
            if (*g_cycle) j = to_json(gen_cycle_graph(k));
            if (*g_par) j = to_json(gen_flat_parallelogram(p, q));
            if (*g_join) j = to_json(gen_join_lines(r));
            if (*g_cayley) j = to_json(gen_cayley_ball(file2.empty() ? surface_presentation(genus) : load_presentation(file2), r));
            if (*g_surface) j = to_json(surface_presentation(genus));
            if (*g_ladder) {
                const json s = read_json_file(ladder_file);
                LadderSpec spec;
                spec.lengths = s.at("lengths").get<std::vector<int>>();
                for (const auto& g : s.at("gluings")) spec.gluings.push_back({g.at("a").get<int>(), g.at("b").get<int>(), g.value("rung", 0)});
                const auto gd = gen_ladder_diagram(spec);
                j = {{"target", to_json(gd.target)}, {"diagram", to_json(gd.diagram)}};
            }
            if (*g_random) {
                const auto gd = gen_random_triangulated_disc(steps, seed);
                j = {{"target", to_json(gd.target)}, {"diagram", to_json(gd.diagram)}};
            }
            emit(j, out);
        } else if (*suite_cmd) {
            const auto cfg = load_suite_config(file);
            const auto report = run_suite(cfg);
            const json j = to_json(report);
            if (cfg.output) write_json_file(*cfg.output, j);
            emit(j);
            if (!report.passed()) exit_code = 1;
        } else {
            std::cout << version() << "\n";
        }
    } catch (const Error& e) {
        std::cerr << json{{"error", to_string(e.kind())}, {"message", e.message()}}.dump() << "\n";
        return 2;
    }
    return exit_code;
}
