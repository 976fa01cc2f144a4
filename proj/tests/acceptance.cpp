// Acceptance run: one PASS/FAIL line per criterion, exit code 0 iff all pass.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "npc/diagram.hpp"
#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/io.hpp"
#include "npc/metric.hpp"
#include "npc/sap.hpp"
#include "npc/smallcancel.hpp"
#include "npc/wsys.hpp"
#include "oracles.hpp"

using namespace npc;

namespace {

struct Result {
    bool pass = true;
    std::ostringstream detail;
};

using Criterion = std::function<void(Result&)>;

// Defect totals from the definition, one per edge-connected triangle part.
std::vector<int> defect_totals(const DiscDiagram& d) {
    const std::size_t n = d.cells.size();
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_edge;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& w = d.cells[c].walk;
        for (std::size_t i = 0; i < w.size(); ++i) by_edge[std::minmax(w[i], w[(i + 1) % w.size()])].push_back(c);
    }
    std::vector<std::size_t> part(n, n);
    std::size_t parts = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (part[s] != n) continue;
        std::vector<std::size_t> stack{s};
        part[s] = parts;
        while (!stack.empty()) {
            const auto c = stack.back();
            stack.pop_back();
            const auto& w = d.cells[c].walk;
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (auto o : by_edge[std::minmax(w[i], w[(i + 1) % w.size()])]) {
                    if (part[o] == n) {
                        part[o] = parts;
                        stack.push_back(o);
                    }
                }
            }
        }
        ++parts;
    }
    std::vector<int> totals;
    for (std::size_t p = 0; p < parts; ++p) {
        std::map<int, int> triangles;
        std::map<std::pair<int, int>, int> edge_use;
        for (std::size_t c = 0; c < n; ++c) {
            if (part[c] != p) continue;
            const auto& w = d.cells[c].walk;
            for (std::size_t i = 0; i < 3; ++i) {
                ++triangles[w[i]];
                ++edge_use[std::minmax(w[i], w[(i + 1) % 3])];
            }
        }
        // A vertex is on the part's boundary iff it meets an edge used by one triangle.
        std::set<int> boundary;
        for (const auto& [e, k] : edge_use) {
            if (k == 1) {
                boundary.insert(e.first);
                boundary.insert(e.second);
            }
        }
        int total = 0;
        for (const auto& [v, t] : triangles) total += (boundary.count(v) ? 3 : 6) - t;
        totals.push_back(total);
    }
    return totals;
}

bool gauss_bonnet_exact(const DiscDiagram& d) {
    const auto mine = gauss_bonnet_audit(d);
    const auto ref = defect_totals(d);
    if (mine.parts.size() != ref.size()) return false;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (ref[i] != 6 || mine.parts[i].total != 6) return false;
    }
    return true;
}

std::vector<VertexId> ids_of(const Complex& c, const std::vector<int>& path) {
    std::vector<VertexId> out;
    for (int x : path) out.push_back(c.id_of(x));
    return out;
}

int centre_of(const Complex& c, const DistanceMatrix& d) {
    int best = 0, ecc_best = -1;
    for (int v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        int ecc = 0;
        for (int x = 0; x < static_cast<int>(c.vertex_count()); ++x) ecc = std::max(ecc, d(v, x));
        if (ecc_best < 0 || ecc < ecc_best) {
            ecc_best = ecc;
            best = v;
        }
    }
    return best;
}

// 1. Gauss-Bonnet on bigon discs over disc(3), triangle fillings and random discs.
void ac1(Result& r) {
    const auto c = gen_equilateral_disc(3);
    const DistanceMatrix d(c);
    const int n = static_cast<int>(c.vertex_count());
    std::size_t bigons = 0, triangles = 0, randoms = 0, bad = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto paths = geodesic_paths(c, d, u, v);
            for (std::size_t a = 0; a < paths.size(); ++a) {
                for (std::size_t b = a + 1; b < paths.size(); ++b) {
                    const auto g1 = certify_geodesic(c, ids_of(c, paths[a]));
                    const auto g2 = certify_geodesic(c, ids_of(c, paths[b]));
                    const auto disc = fill_bigon(c, g1, g2);
                    ++bigons;
                    if (!gauss_bonnet_exact(disc)) ++bad;
                }
            }
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const auto t = fill_triangle(c, c.id_of(u), c.id_of(v), c.id_of(w));
                if (t.area() == 0) continue;
                ++triangles;
                if (!gauss_bonnet_exact(t)) ++bad;
            }
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto g = gen_random_triangulated_disc(40, seed);
        if (!validate_diagram(g.diagram, g.target).passed()) {
            ++bad;
            continue;
        }
        ++randoms;
        if (!gauss_bonnet_exact(g.diagram)) ++bad;
    }
    r.pass = bad == 0 && randoms == 100;
    r.detail << bigons << " bigon discs, " << triangles << " triangle fillings, " << randoms
             << " random discs; " << bad << " with defect total != 6";
}

// 2. Bigons at distance <= 6 in disc(4).
void ac2(Result& r) {
    const auto c = gen_equilateral_disc(4);
    const DistanceMatrix d(c);
    DiagramSearcher oracle_search(c);
    const int n = static_cast<int>(c.vertex_count());
    std::size_t bigons = 0, bad = 0;
    int max_area_ratio_violations = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (d(u, v) > 6) continue;
            const auto paths = geodesic_paths(c, d, u, v);
            for (std::size_t a = 0; a < paths.size(); ++a) {
                for (std::size_t b = a + 1; b < paths.size(); ++b) {
                    ++bigons;
                    const auto g1 = certify_geodesic(c, ids_of(c, paths[a]));
                    const auto g2 = certify_geodesic(c, ids_of(c, paths[b]));
                    const auto disc = fill_bigon(c, g1, g2);
                    const int len = g1.length();
                    bool ok = validate_diagram(disc, c).passed() && multiplicity(disc) == 1;
                    const auto deg = degrees(disc);
                    std::set<int> boundary(disc.boundary.begin(), disc.boundary.end());
                    for (std::size_t x = 0; x < deg.size(); ++x) {
                        ok = ok && (boundary.count(static_cast<int>(x)) ? deg[x] <= 5 : deg[x] == 6);
                    }
                    std::vector<VertexId> loop = g1.vertices;
                    for (std::size_t i = g2.vertices.size() - 1; i-- > 1;) loop.push_back(g2.vertices[i]);
                    const auto best = oracle_search.min_area(loop, len * len / 2);
                    ok = ok && best && *best == disc.area();
                    if (2 * disc.area() > len * len) ++max_area_ratio_violations;
                    if (!ok) ++bad;
                }
            }
        }
    }
    r.pass = bad == 0 && max_area_ratio_violations == 0 && bigons > 0;
    r.detail << bigons << " bigons; " << bad << " violating degree/multiplicity/minimal-area, "
             << max_area_ratio_violations << " above n^2/2";
}

// 3. Triples within radius 3 of the centre of disc(4).
void ac3(Result& r) {
    const auto c = gen_equilateral_disc(4);
    const DistanceMatrix d(c);
    const int centre = centre_of(c, d);
    std::vector<int> ball;
    for (int v = 0; v < static_cast<int>(c.vertex_count()); ++v)
        if (d(centre, v) <= 3) ball.push_back(v);
    std::size_t triples = 0, bad = 0;
    int mult = 0, deg = 0;
    for (std::size_t i = 0; i < ball.size(); ++i)
        for (std::size_t j = i + 1; j < ball.size(); ++j)
            for (std::size_t k = j + 1; k < ball.size(); ++k) {
                ++triples;
                try {
                    const auto t = fill_triangle(c, c.id_of(ball[i]), c.id_of(ball[j]), c.id_of(ball[k]));
                    const int m = multiplicity(t), g = max_degree(t);
                    mult = std::max(mult, m);
                    deg = std::max(deg, g);
                    if (!validate_diagram(t, c).passed() || !verify_tight(t, 14).passed() || m > 4 || g > 14) ++bad;
                } catch (const Error&) {
                    ++bad;
                }
            }
    r.pass = bad == 0 && triples >= 200;
    r.detail << triples << " triples; max multiplicity " << mult << ", max degree " << deg << "; " << bad << " failures";
}

// 4. SAP bound from the empirical tightness constant on disc(3).
void ac4(Result& r) {
    const auto c = gen_equilateral_disc(3);
    const auto hex = tight_hexagon_probe(c, 14, HexagonSampling{});
    const int big_n = hex.stats.at("empirical_N").get<int>();
    r.pass = hex.passed();
    r.detail << "N=" << big_n << " from " << hex.stats.at("hexagons") << " hexagons;";
    for (int n = 1; n <= 3; ++n) {
        const auto p = sap_probe(c, n, 3);
        bool ok = p.exhaustive && verify_sap_bound(p, big_n).passed() && !p.vacuous;
        // Re-derive the witness length independently.
        const auto& w = p.witness;
        std::set<VertexId> k;
        for (const auto& v : w.at("K")) k.insert(v.get<VertexId>());
        const Edge e{w.at("exit_edge")[0], w.at("exit_edge")[1]};
        const Edge e2{w.at("exit_edge_prime")[0], w.at("exit_edge_prime")[1]};
        ok = ok && oracle::path_around_length(c, k, e, e2) == p.r_emp && replay_sap_witness(c, w) == p.r_emp;
        r.pass = r.pass && ok;
        r.detail << " n=" << n << ": r_emp=" << p.r_emp << " <= " << n * big_n * big_n << " (" << p.configurations
                 << " configurations)";
    }
}

// 5. Small cancellation.
void ac5(Result& r) {
    const auto s = surface_presentation(2);
    const auto rep = check_c16_presentation(s);
    const auto naive = oracle::naive_max_pieces(s.relators);
    const bool surface_ok = rep.passed && rep.max_piece == naive && rep.max_piece == std::vector<int>{1};
    const auto power = check_c16_presentation(Presentation::make({"a", "b"}, {"ababab"}));
    const auto cx = check_c16_complex(gen_cayley_ball(s, 2));
    const int cx_max = *std::max_element(cx.max_piece.begin(), cx.max_piece.end());
    r.pass = surface_ok && !power.passed && cx.passed && cx_max == 1;
    r.detail << "surface: max piece " << rep.max_piece[0] << " (naive " << naive[0] << "), "
             << (rep.passed ? "C'(1/6)" : "not C'(1/6)") << "; (ab)^3: " << (power.passed ? "passes" : "fails")
             << "; Cayley ball r=2: " << cx.max_piece.size() << " cells, max piece " << cx_max;
}

// 6. Classification of reduced diagrams over the Cayley ball.
void ac6(Result& r) {
    const auto c = gen_cayley_ball(surface_presentation(2), 2);
    const auto small = gen_cayley_ball(surface_presentation(2), 1);
    // Cycle enumeration cross-check on the smaller ball.
    const bool cycles_ok = embedded_cycles(small, 12).size() == oracle::simple_cycles(small, 12).size();
    DiagramSearcher s(c);
    std::map<std::string, int> kinds;
    int unclassifiable = 0, invalid = 0;
    const auto loops = embedded_cycles(c, 12);
    for (const auto& loop : loops) {
        const auto d = s.search(ids_of(c, loop), 32);
        if (!validate_diagram(d, c).passed() || !is_reduced(d).passed()) ++invalid;
        try {
            ++kinds[std::string(to_string(classify(d).kind))];
        } catch (const Error&) {
            ++unclassifiable;
        }
    }
    r.pass = cycles_ok && unclassifiable == 0 && invalid == 0 && !loops.empty();
    r.detail << loops.size() << " embedded loops;";
    for (const auto& [k, v] : kinds) r.detail << " " << k << "=" << v;
    r.detail << "; unclassifiable " << unclassifiable << ", invalid " << invalid;
}

// 7. Word problem against the Fuchsian holonomy.
void ac7(Result& r) {
    const auto p = surface_presentation(2);
    const DehnSolver solver(p);
    const oracle::Fuchsian f;
    std::mt19937_64 rng(20240601);
    const std::string letters = "abABcdCD";
    const std::string rel = p.relators[0];
    std::vector<std::string> words;
    while (words.size() < 200) {
        std::string w;
        const int len = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < len; ++i) w.push_back(letters[rng() % 8]);
        words.push_back(w);
    }
    // Conjugates of relators: trivial.
    while (words.size() < 350) {
        std::string r8 = (rng() % 2) ? rel : oracle::inverse_word(rel);
        std::rotate(r8.begin(), r8.begin() + static_cast<std::ptrdiff_t>(rng() % 8), r8.end());
        const char x = letters[rng() % 8];
        const std::string w = oracle::free_reduce(std::string(1, x) + r8 + std::string(1, oracle::inv(x)));
        if (w.size() <= 10) words.push_back(w);
    }
    // Relators with one letter changed or dropped: mostly nontrivial but close.
    while (words.size() < 500) {
        std::string r8 = (rng() % 2) ? rel : oracle::inverse_word(rel);
        std::rotate(r8.begin(), r8.begin() + static_cast<std::ptrdiff_t>(rng() % 8), r8.end());
        const std::size_t at = rng() % 8;
        if (rng() % 2) {
            r8[at] = letters[rng() % 8];
        } else {
            r8.erase(at, 1);
        }
        words.push_back(r8);
    }
    int agree = 0, trivial = 0;
    for (const auto& w : words) {
        const bool t = f.trivial(w);
        trivial += t;
        agree += solver.is_trivial(w) == t;
    }
    r.pass = agree == 500;
    r.detail << agree << "/500 agree (" << trivial << " trivial)";
}

// 8. Interval sizes: constant on flat discs, 2r+4 on the join of two lines.
void ac8(Result& r) {
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::size_t> first;
    bool constant = true;
    std::size_t pairs = 0;
    for (int rad = 2; rad <= 4; ++rad) {
        const auto c = gen_equilateral_disc(rad);
        const auto coords = equilateral_disc_coordinates(rad);
        const auto ref = oracle::floyd(c);
        for (VertexId u : c.vertex_ids()) {
            for (VertexId v : c.vertex_ids()) {
                const auto cu = coords[static_cast<std::size_t>(u)], cv = coords[static_cast<std::size_t>(v)];
                if (hex_distance(cu, {0, 0}) > 2 || hex_distance(cv, {0, 0}) > 2) continue;
                const std::size_t size = interval(c, u, v).size();
                std::size_t count = 0;
                for (VertexId x : c.vertex_ids()) count += ref(u, x) + ref(x, v) == ref(u, v);
                constant = constant && count == size;
                const auto key = std::make_pair(std::make_pair(cu.i, cu.j), std::make_pair(cv.i, cv.j));
                if (rad == 2) {
                    first[key] = size;
                    ++pairs;
                } else {
                    constant = constant && first.at(key) == size;
                }
            }
        }
    }
    std::vector<double> xs, ys;
    bool exact = true;
    for (int rad = 1; rad <= 6; ++rad) {
        const auto c = gen_join_lines(rad);
        const std::size_t size = interval(c, rad - 1, rad + 1).size();
        exact = exact && size == static_cast<std::size_t>(2 * rad + 4);
        xs.push_back(rad);
        ys.push_back(static_cast<double>(size));
    }
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    r.pass = constant && exact && slope == 2.0;
    r.detail << pairs << " endpoint pairs constant over r=2..4: " << (constant ? "yes" : "no")
             << "; join-lines |I(a-1,a1)| = 2r+4 for r=1..6: " << (exact ? "yes" : "no") << ", slope " << slope;
}

// 9. Weak systolicity calibration.
void ac9(Result& r) {
    bool ok = true;
    for (int rad = 2; rad <= 4; ++rad) ok = ok && check_weakly_systolic(gen_equilateral_disc(rad)).passed();
    ok = ok && check_weakly_systolic(gen_tree(2, 4)).passed();
    const auto c4 = gen_cycle_graph(4);
    const auto rep = check_weakly_systolic(c4);
    const auto again = check_weakly_systolic(c4);
    bool witness_ok = !rep.passed() && rep.witness.at("condition") == "V" && rep.witness == again.witness;
    if (witness_ok) {
        const auto d = oracle::floyd(c4);
        const auto nb = oracle::neighbours(c4);
        const auto& w = rep.witness;
        const VertexId v = w.at("v"), x = w.at("vertex"), a = w.at("pair")[0], b = w.at("pair")[1];
        const int n = w.at("n");
        witness_ok = d(v, x) == n && d(v, a) == n - 1 && d(v, b) == n - 1 && nb.at(x).count(a) && nb.at(x).count(b) &&
                     !nb.at(a).count(b);
    }
    r.pass = ok && witness_ok;
    r.detail << "disc(2..4), tree(2,4) " << (ok ? "pass" : "FAIL") << "; 4-cycle witness " << rep.witness.dump();
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = pclose(pipe);
    return out;
}

// 10. Suite output identical for 1 and 4 threads.
void ac10(Result& r) {
    std::string dumps[2];
    bool passed = true;
    const int threads[2] = {1, 4};
    for (int i = 0; i < 2; ++i) {
        int status = 0;
        const std::string cmd = "NPC_THREADS=" + std::to_string(threads[i]) + " '" NPC_BINARY "' suite '" NPC_FIXTURES "/suite.json'";
        auto j = json::parse(run_capture(cmd, status));
        passed = passed && status == 0 && j.at("verdict") == "pass";
        j.erase("wall_time_s");
        dumps[i] = j.dump();
        if (i == 0) r.detail << j.at("checks").size() << " checks; ";
    }
    r.pass = passed && dumps[0] == dumps[1];
    r.detail << "suite " << (passed ? "passes" : "FAILS") << ", reports " << (dumps[0] == dumps[1] ? "identical" : "DIFFER")
             << " for NPC_THREADS=1,4";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"Gauss-Bonnet exactness", ac1},
        {"bigon filling bounds", ac2},
        {"triangle filling bounds", ac3},
        {"SAP bound from tight hexagons", ac4},
        {"small cancellation verification", ac5},
        {"classification conformance", ac6},
        {"word problem cross-validation", ac7},
        {"finite vs infinite intervals", ac8},
        {"weak systolicity calibration", ac9},
        {"determinism across thread counts", ac10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !r.pass;
        std::printf("AC%-2zu %s  %s: %s [%.1fs]\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    r.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
