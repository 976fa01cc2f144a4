#include "npc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <variant>

#include "npc/complex.hpp"
#include "npc/diagram.hpp"
#include "npc/error.hpp"
#include "npc/io.hpp"
#include "npc/metric.hpp"
#include "npc/parallel.hpp"
#include "npc/sap.hpp"
#include "npc/smallcancel.hpp"
#include "npc/wsys.hpp"

namespace npc {

std::string_view version() { return "1.0.0"; }

namespace {

using Target = std::variant<Complex, Presentation, DiscDiagram>;

Error config_error(const std::string& what) { return Error(ErrorKind::ConfigError, what); }

template <class T>
T param(const json& params, const char* key, T fallback) {
    if (!params.contains(key)) return fallback;
    try {
        return params.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error(std::string("parameter '") + key + "' has the wrong type");
    }
}

const Complex& need_complex(const Target& t, const std::string& check) {
    if (const auto* c = std::get_if<Complex>(&t)) return *c;
    throw Error(ErrorKind::InvalidArgument, check + " needs a complex target");
}

const DiscDiagram& need_diagram(const Target& t, const std::string& check) {
    if (const auto* d = std::get_if<DiscDiagram>(&t)) return *d;
    throw Error(ErrorKind::InvalidArgument, check + " needs a diagram target");
}

struct Outcome {
    CheckReport report;
    bool exhaustive = true;
};

Outcome verdict_only(CheckReport r) { return {std::move(r), true}; }

// Fills every pair of geodesics between vertices at distance <= max_distance.
Outcome bigon_fillings(const Complex& c, const json& params) {
    const int max_d = param(params, "max_distance", 3);
    const std::size_t cap = param<std::size_t>(params, "geodesic_cap", 16);
    const DistanceMatrix dist(c);
    const int n = static_cast<int>(c.vertex_count());
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (dist(u, v) >= 1 && dist(u, v) <= max_d) pairs.emplace_back(u, v);
        }
    }
    struct Part {
        std::size_t bigons = 0;
        bool truncated = false;
        int max_area = 0;
        json witness;
    };
    const auto parts = parallel_map(pairs.size(), [&](std::size_t i) {
        Part p;
        const auto [u, v] = pairs[i];
        auto paths = geodesic_paths(c, dist, u, v, cap + 1);
        if (paths.size() > cap) {
            p.truncated = true;
            paths.resize(cap);
        }
        auto as_geodesic = [&](const std::vector<int>& path) {
            std::vector<VertexId> out;
            for (int x : path) out.push_back(c.id_of(x));
            return certify_geodesic(c, out);
        };
        for (std::size_t a = 0; a < paths.size() && p.witness.is_null(); ++a) {
            for (std::size_t b = a + 1; b < paths.size(); ++b) {
                ++p.bigons;
                const auto g1 = as_geodesic(paths[a]);
                const auto g2 = as_geodesic(paths[b]);
                const auto d = fill_bigon(c, g1, g2);
                const auto valid = validate_diagram(d, c);
                const int mult = multiplicity(d);
                p.max_area = std::max(p.max_area, d.area());
                if (!valid.passed() || mult != 1 || 2 * d.area() > g1.length() * g1.length()) {
                    p.witness = {{"g1", g1.vertices}, {"g2", g2.vertices}, {"multiplicity", mult}, {"area", d.area()}};
                    break;
                }
            }
        }
        return p;
    });
    std::size_t bigons = 0;
    bool truncated = false;
    int max_area = 0;
    json witness;
    for (const auto& p : parts) {
        bigons += p.bigons;
        truncated = truncated || p.truncated;
        max_area = std::max(max_area, p.max_area);
        if (witness.is_null()) witness = p.witness;
    }
    json stats = {{"pairs", pairs.size()}, {"bigons", bigons}, {"max_area", max_area}, {"truncated", truncated}};
    auto r = witness.is_null() ? CheckReport::pass("bigon_fillings", stats)
                               : CheckReport::fail("bigon_fillings", witness, stats);
    return {std::move(r), !truncated};
}

// fill_triangle over all triples within `radius` of the least vertex of minimal eccentricity.
Outcome triangle_fillings(const Complex& c, const json& params) {
    const int radius = param(params, "radius", 2);
    const DistanceMatrix dist(c);
    const int n = static_cast<int>(c.vertex_count());
    int centre = 0, best = -1;
    for (int v = 0; v < n; ++v) {
        int ecc = 0;
        for (int x = 0; x < n; ++x) ecc = std::max(ecc, dist(v, x));
        if (best < 0 || ecc < best) {
            best = ecc;
            centre = v;
        }
    }
    std::vector<int> ball;
    for (int v = 0; v < n; ++v) {
        if (dist(centre, v) <= radius) ball.push_back(v);
    }
    std::vector<std::array<int, 3>> triples;
    for (std::size_t i = 0; i < ball.size(); ++i) {
        for (std::size_t j = i + 1; j < ball.size(); ++j) {
            for (std::size_t k = j + 1; k < ball.size(); ++k) triples.push_back({ball[i], ball[j], ball[k]});
        }
    }
    struct Part {
        int mult = 0;
        int deg = 0;
        json witness;
    };
    const auto parts = parallel_map(triples.size(), [&](std::size_t i) {
        Part p;
        const auto [a, b, t] = triples[i];
        try {
            const auto d = fill_triangle(c, c.id_of(a), c.id_of(b), c.id_of(t));
            p.mult = multiplicity(d);
            p.deg = max_degree(d);
            if (!validate_diagram(d, c).passed() || !verify_tight(d, 14).passed() || p.mult > 4) {
                p.witness = {{"triple", {c.id_of(a), c.id_of(b), c.id_of(t)}}, {"multiplicity", p.mult}, {"max_degree", p.deg}};
            }
        } catch (const Error& e) {
            p.witness = {{"triple", {c.id_of(a), c.id_of(b), c.id_of(t)}}, {"error", to_string(e.kind())}, {"message", e.message()}};
        }
        return p;
    });
    int mult = 0, deg = 0;
    json witness;
    for (const auto& p : parts) {
        mult = std::max(mult, p.mult);
        deg = std::max(deg, p.deg);
        if (witness.is_null()) witness = p.witness;
    }
    json stats = {{"centre", c.id_of(centre)}, {"radius", radius}, {"triples", triples.size()}, {"max_multiplicity", mult}, {"max_degree", deg}};
    return verdict_only(witness.is_null() ? CheckReport::pass("triangle_fillings", stats)
                                          : CheckReport::fail("triangle_fillings", witness, stats));
}

HexagonSampling hexagon_spec(const json& params, const json& caps) {
    HexagonSampling spec;
    spec.max_perimeter = param(params, "max_perimeter", spec.max_perimeter);
    spec.samples = param<std::size_t>(params, "samples", 0);
    spec.exhaustive = spec.samples == 0;
    spec.seed = param<std::uint64_t>(params, "seed", spec.seed);
    spec.area_cap = param(caps, "area_cap", spec.area_cap);
    return spec;
}

Outcome run_check(const SuiteCheck& check, const Target& target, const json& caps) {
    const std::string& name = check.name;
    const json& p = check.params;
    if (name == "validate") {
        if (const auto* d = std::get_if<DiscDiagram>(&target)) {
            if (p.contains("complex")) return verdict_only(validate_diagram(*d, load_complex(p.at("complex").get<std::string>())));
            return verdict_only(validate_planar(*d));
        }
        if (const auto* pr = std::get_if<Presentation>(&target)) {
            return verdict_only(CheckReport::pass("validate", {{"generators", pr->generators.size()}, {"relators", pr->relators.size()}}));
        }
        return verdict_only(validate(std::get<Complex>(target)));
    }
    if (name == "is_flag") return verdict_only(is_flag(need_complex(target, name)));
    if (name == "weakly_systolic") {
        const auto& c = need_complex(target, name);
        return verdict_only((param(p, "local", false) ? check_locally(c) : check_weakly_systolic(c)).to_report());
    }
    if (name == "systolic") return verdict_only(check_systolic(need_complex(target, name)));
    if (name == "weak_modularity") return verdict_only(check_weak_modularity(need_complex(target, name)));
    if (name == "c16") {
        if (const auto* pr = std::get_if<Presentation>(&target)) return verdict_only(to_report(check_c16_presentation(*pr), "c16_presentation"));
        return verdict_only(to_report(check_c16_complex(need_complex(target, name)), "c16_complex"));
    }
    if (name == "delta") {
        const auto method = param<std::string>(p, "method", "4pt") == "slim" ? DeltaMethod::SlimTriangles : DeltaMethod::FourPoint;
        const auto est = delta_estimate(need_complex(target, name), method);
        json stats = to_json(est);
        if (p.contains("max") && est.value() > p.at("max").get<double>()) return verdict_only(CheckReport::fail("delta", est.witness, stats));
        return verdict_only(CheckReport::pass("delta", stats));
    }
    if (name == "gauss_bonnet") {
        const auto t = gauss_bonnet_audit(need_diagram(target, name));
        json stats = {{"total", t.total()}, {"parts", t.parts.size()}};
        return verdict_only(t.passed() ? CheckReport::pass("gauss_bonnet", stats) : CheckReport::fail("gauss_bonnet", to_json(t), stats));
    }
    if (name == "classify") {
        const auto cl = classify(need_diagram(target, name));
        return verdict_only(CheckReport::pass("classify", to_json(cl)));
    }
    if (name == "reduced") return verdict_only(is_reduced(need_diagram(target, name)));
    if (name == "bigon_fillings") return bigon_fillings(need_complex(target, name), p);
    if (name == "triangle_fillings") return triangle_fillings(need_complex(target, name), p);
    if (name == "tight_hexagons") {
        const auto spec = hexagon_spec(p, caps);
        auto r = tight_hexagon_probe(need_complex(target, name), param(p, "N", 14), spec);
        const bool exhaustive = r.stats.value("exhaustive", true);
        return {std::move(r), exhaustive};
    }
    if (name == "sap_bound") {
        const auto& c = need_complex(target, name);
        const auto hex = tight_hexagon_probe(c, param(p, "N", 14), hexagon_spec(p, caps));
        if (!hex.passed()) return {hex, hex.stats.value("exhaustive", true)};
        const int big_n = hex.stats.at("empirical_N").get<int>();
        const auto probe = sap_probe(c, param(p, "n", 1), param(p, "radius", 2), param<std::size_t>(caps, "geodesic_cap", kDefaultGeodesicCap));
        auto r = verify_sap_bound(probe, big_n);
        r.stats["probe"] = to_json(probe);
        r.stats["probe"].erase("witness");
        return {std::move(r), probe.exhaustive};
    }
    if (name == "word_problem") {
        const auto* pr = std::get_if<Presentation>(&target);
        if (!pr) throw Error(ErrorKind::InvalidArgument, "word_problem needs a presentation target");
        const DehnSolver solver(*pr);
        const auto words = param<std::vector<std::string>>(p, "words", {});
        const auto expect = param<std::vector<bool>>(p, "trivial", {});
        if (expect.size() != words.size()) throw config_error("word_problem: 'trivial' must match 'words'");
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (solver.is_trivial(words[i]) != expect[i]) {
                return verdict_only(CheckReport::fail("word_problem", {{"word", words[i]}, {"expected_trivial", expect[i]}, {"reduced", solver.reduce(words[i])}},
                                                      {{"words", words.size()}}));
            }
        }
        return verdict_only(CheckReport::pass("word_problem", {{"words", words.size()}}));
    }
    throw config_error("unknown check '" + name + "'");
}

Target load_target(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    if (has_format(j, "npc-presentation")) return presentation_from_json(j);
    if (has_format(j, "npc-diagram")) return diagram_from_json(j);
    return complex_from_json(j);
}

}  // namespace

const std::vector<std::string>& suite_check_names() {
    static const std::vector<std::string> names = {
        "validate",       "is_flag", "weakly_systolic", "systolic",       "weak_modularity",   "c16",
        "delta",          "gauss_bonnet", "classify",   "reduced",        "bigon_fillings",    "triangle_fillings",
        "tight_hexagons", "sap_bound",    "word_problem"};
    return names;
}

SuiteConfig parse_suite_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw config_error("suite config must be a JSON object");
    if (j.value("format", "") != kSuiteFormat) throw config_error("suite config format must be \"npc-suite-v1\"");
    SuiteConfig cfg;
    const auto& names = suite_check_names();
    for (const auto& entry : j.value("checks", json::array())) {
        SuiteCheck check;
        if (!entry.contains("name") || !entry.at("name").is_string()) throw config_error("check without a name");
        check.name = entry.at("name").get<std::string>();
        if (std::find(names.begin(), names.end(), check.name) == names.end()) throw config_error("unknown check '" + check.name + "'");
        if (!entry.contains("target") || !entry.at("target").is_string()) throw config_error("check '" + check.name + "' has no target");
        const std::filesystem::path raw = entry.at("target").get<std::string>();
        check.target = raw.is_absolute() ? raw : base_dir / raw;
        if (!std::filesystem::exists(check.target)) throw config_error("target file not found: " + check.target.string());
        check.params = entry.value("params", json::object());
        if (check.params.contains("complex")) {
            const std::filesystem::path c = check.params.at("complex").get<std::string>();
            const auto resolved = c.is_absolute() ? c : base_dir / c;
            if (!std::filesystem::exists(resolved)) throw config_error("target file not found: " + resolved.string());
            check.params["complex"] = resolved.string();
        }
        cfg.checks.push_back(std::move(check));
    }
    cfg.threads = j.value("threads", 0);
    cfg.caps = j.value("caps", json::object());
    if (j.contains("output")) cfg.output = base_dir / j.at("output").get<std::string>();
    return cfg;
}

SuiteConfig load_suite_config(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw config_error("suite config not found: " + path.string());
    json j;
    try {
        j = read_json_file(path);
    } catch (const Error& e) {
        throw config_error(path.string() + ": " + e.message());
    }
    return parse_suite_config(j, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

bool SuiteReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.report.passed(); });
}

bool SuiteReport::exhaustive() const {
    return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.exhaustive; });
}

SuiteReport run_suite(const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    set_thread_override(config.threads);
    std::map<std::filesystem::path, Target> targets;
    for (const auto& check : config.checks) {
        if (targets.count(check.target)) continue;
        try {
            targets.emplace(check.target, load_target(check.target));
        } catch (const Error& e) {
            set_thread_override(0);
            throw config_error(check.target.string() + ": " + e.message());
        }
    }
    SuiteReport report;
    // Checks run in order; each one parallelises internally.
    for (const auto& check : config.checks) {
        SuiteEntry entry;
        entry.name = check.name;
        entry.target = check.target.filename().string();
        try {
            auto outcome = run_check(check, targets.at(check.target), config.caps);
            entry.report = std::move(outcome.report);
            entry.exhaustive = outcome.exhaustive;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ConfigError) {
                set_thread_override(0);
                throw;
            }
            entry.report = CheckReport::fail(check.name, {{"error", to_string(e.kind())}, {"message", e.message()}});
            entry.exhaustive = e.kind() != ErrorKind::NonExhaustiveProbe;
        }
        report.entries.push_back(std::move(entry));
    }
    set_thread_override(0);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& e : r.entries) {
        checks.push_back({{"name", e.name}, {"target", e.target}, {"exhaustive", e.exhaustive}, {"report", to_json(e.report)}});
    }
    return {{"format", kSuiteReportFormat},
            {"version", version()},
            {"verdict", r.passed() ? "pass" : "fail"},
            {"exhaustive", r.exhaustive()},
            {"checks", checks},
            {"wall_time_s", r.wall_time_s}};
}

}  // namespace npc
