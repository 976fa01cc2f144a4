#include "npc/sap.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "npc/diagram.hpp"
#include "npc/error.hpp"
#include "npc/parallel.hpp"
#include "npc/wsys.hpp"

namespace npc {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<VertexId> ids(const Complex& c, const std::vector<int>& idx) {
    std::vector<VertexId> out;
    for (int i : idx) out.push_back(c.id_of(i));
    return out;
}

Edge edge_ids(const Complex& c, int e) {
    const auto [a, b] = c.edges()[at(e)];
    return {c.id_of(a), c.id_of(b)};
}

int edge_of(const Complex& c, Edge e) {
    if (!c.has_vertex(e.first) || !c.has_vertex(e.second)) return -1;
    return c.edge_index(c.index_of(e.first), c.index_of(e.second));
}

// Edges meeting k without lying in it.
bool around_node(const Subcomplex& k, int e) {
    const auto [a, b] = k.parent().edges()[at(e)];
    return !k.has_edge(e) && (k.has_vertex(a) || k.has_vertex(b));
}

// BFS over around-edges from e; parent links give the path.
struct AroundSearch {
    std::vector<int> dist;
    std::vector<int> parent;
};

AroundSearch around_bfs(const Subcomplex& k, int start) {
    const Complex& c = k.parent();
    AroundSearch s{std::vector<int>(c.edge_count(), -1), std::vector<int>(c.edge_count(), -1)};
    s.dist[at(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        const int e = queue.front();
        queue.pop_front();
        for (int cell : c.cells_of_edge(e)) {
            const auto& w = c.cell(cell);
            for (std::size_t i = 0; i < w.size(); ++i) {
                const int f = c.edge_index(w[i], w[(i + 1) % w.size()]);
                if (f < 0 || s.dist[at(f)] >= 0 || !around_node(k, f)) continue;
                s.dist[at(f)] = s.dist[at(e)] + 1;
                s.parent[at(f)] = e;
                queue.push_back(f);
            }
        }
    }
    return s;
}

int common_cell(const Complex& c, int e, int f) {
    const auto& a = c.cells_of_edge(e);
    const auto& b = c.cells_of_edge(f);
    int best = -1;
    for (int x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end() && (best < 0 || x < best)) best = x;
    }
    return best;
}

}  // namespace

ExitEdge exit_edge(const Subcomplex& k, const std::vector<VertexId>& g) {
    const Complex& c = k.parent();
    int last = -1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (k.has_vertex(c.index_of(g[i]))) last = static_cast<int>(i);
    }
    if (last < 0) throw Error(ErrorKind::DoesNotGoThrough, "geodesic has no vertex in the subcomplex");
    if (last + 1 == static_cast<int>(g.size())) throw Error(ErrorKind::EndsInside, "geodesic ends inside the subcomplex");
    ExitEdge x;
    x.geodesic = g;
    x.index = last;
    x.edge = std::minmax(g[at(last)], g[at(last + 1)]);
    return x;
}

PathAround path_around(const Subcomplex& k, Edge e, Edge e2, int length_cap) {
    const Complex& c = k.parent();
    const int a = edge_of(c, e);
    const int b = edge_of(c, e2);
    for (auto [x, raw] : {std::pair{a, e}, std::pair{b, e2}}) {
        if (x < 0 || !around_node(k, x)) {
            throw Error(ErrorKind::InvalidArgument, "edge (" + std::to_string(raw.first) + "," + std::to_string(raw.second) +
                                                        ") must meet the subcomplex without lying in it");
        }
    }
    PathAround p;
    if (a == b) {
        if (c.cells_of_edge(a).empty()) throw Error(ErrorKind::NoPath, "no cell contains the edge");
        p.cells.push_back(c.cells_of_edge(a).front());
        p.edges = {edge_ids(c, a), edge_ids(c, a)};
        return p;
    }
    const auto s = around_bfs(k, a);
    if (s.dist[at(b)] < 0) throw Error(ErrorKind::NoPath, "the exit edges are not joined around the subcomplex");
    if (s.dist[at(b)] > length_cap) {
        throw Error(ErrorKind::CapExceeded, "path around has length " + std::to_string(s.dist[at(b)]));
    }
    std::vector<int> chain{b};
    while (chain.back() != a) chain.push_back(s.parent[at(chain.back())]);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        p.edges.push_back(edge_ids(c, chain[i]));
        if (i + 1 < chain.size()) p.cells.push_back(common_cell(c, chain[i], chain[i + 1]));
    }
    return p;
}

json to_json(const PathAround& p) {
    json edges = json::array();
    for (const auto& [a, b] : p.edges) edges.push_back({a, b});
    return {{"length", p.length()}, {"cells", p.cells}, {"edges", edges}};
}

// ---------------------------------------------------------------------------

namespace {

int centre_of(const DistanceMatrix& d) {
    int best = 0;
    int best_ecc = -1;
    for (int v = 0; v < static_cast<int>(d.size()); ++v) {
        int ecc = 0;
        for (int x = 0; x < static_cast<int>(d.size()); ++x) ecc = std::max(ecc, d(v, x));
        if (best_ecc < 0 || ecc < best_ecc) {
            best = v;
            best_ecc = ecc;
        }
    }
    return best;
}

int induced_edges(const Complex& c, const std::vector<int>& s) {
    int n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) n += c.adjacent(s[i], s[j]);
    }
    return n;
}

// Connected vertex sets of the ball whose induced subgraph has at most n edges.
std::vector<std::vector<int>> small_connected_sets(const Complex& c, const std::vector<char>& ball, int n) {
    std::set<std::vector<int>> found;
    std::function<void(std::vector<int>)> grow = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        if (!found.insert(s).second) return;
        for (int v : s) {
            for (int x : c.neighbors(v)) {
                if (!ball[at(x)] || x < s.front() || std::binary_search(s.begin(), s.end(), x)) continue;
                auto t = s;
                t.push_back(x);
                if (induced_edges(c, t) <= n) grow(std::move(t));
            }
        }
    };
    for (int v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        if (ball[at(v)]) grow({v});
    }
    return {found.begin(), found.end()};
}

Subcomplex induced(const Complex& c, const std::vector<int>& s) {
    std::vector<VertexId> v = ids(c, s);
    std::vector<std::pair<VertexId, VertexId>> e;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (c.adjacent(s[i], s[j])) e.emplace_back(v[i], v[j]);
        }
    }
    return Subcomplex::from_parts(c, v, e);
}

std::vector<int> bfs_avoiding(const Complex& c, const std::vector<char>& blocked, int source) {
    std::vector<int> d(c.vertex_count(), -1);
    d[at(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : c.neighbors(x)) {
            if (blocked[at(y)] || d[at(y)] >= 0) continue;
            d[at(y)] = d[at(x)] + 1;
            queue.push_back(y);
        }
    }
    return d;
}

// Least geodesic from a to b in the graph minus the blocked vertices.
std::vector<int> least_path_avoiding(const Complex& c, const std::vector<char>& blocked, int a, int b) {
    const auto d = bfs_avoiding(c, blocked, b);
    std::vector<int> path{a};
    while (path.back() != b) {
        for (int y : c.neighbors(path.back())) {
            if (!blocked[at(y)] && d[at(y)] == d[at(path.back())] - 1) {
                path.push_back(y);
                break;
            }
        }
    }
    return path;
}

struct KResult {
    std::size_t configurations = 0;
    std::size_t no_path = 0;
    bool exhaustive = true;
    int best = -1;
    json witness;
};

KResult probe_k(const Complex& c, const DistanceMatrix& dist, const std::vector<int>& kset, std::size_t geodesic_cap) {
    KResult r;
    const int nv = static_cast<int>(c.vertex_count());
    std::vector<char> in_k(at(nv), 0);
    for (int v : kset) in_k[at(v)] = 1;
    const Subcomplex k = induced(c, kset);
    std::vector<int> candidates;
    for (int e = 0; e < static_cast<int>(c.edge_count()); ++e) {
        const auto [a, b] = c.edges()[at(e)];
        if (in_k[at(a)] != in_k[at(b)]) candidates.push_back(e);
    }
    // Path-around lengths between candidate edges; -1 for none.
    const std::size_t m = candidates.size();
    std::map<int, std::size_t> slot;
    for (std::size_t i = 0; i < m; ++i) slot[candidates[i]] = i;
    std::vector<int> pa(m * m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const auto s = around_bfs(k, candidates[i]);
        for (std::size_t j = 0; j < m; ++j) pa[i * m + j] = s.dist[at(candidates[j])];
        pa[i * m + i] = c.cells_of_edge(candidates[i]).empty() ? -1 : 1;
    }
    // Exit edges towards each w: exits[w] = sorted candidate slots.
    std::vector<std::vector<std::size_t>> exits(at(nv));
    for (int w = 0; w < nv; ++w) {
        if (in_k[at(w)]) continue;
        for (std::size_t i = 0; i < m; ++i) {
            auto [x, y] = c.edges()[at(candidates[i])];
            if (!in_k[at(x)]) std::swap(x, y);
            for (int v : kset) {
                if (dist(v, x) + 1 + dist(y, w) == dist(v, w)) {
                    exits[at(w)].push_back(i);
                    break;
                }
            }
        }
        for (int v : kset) {
            if (count_geodesics(c, dist, v, w) > geodesic_cap) r.exhaustive = false;
        }
    }
    for (int w = 0; w < nv; ++w) {
        if (in_k[at(w)]) continue;
        const auto dk = bfs_avoiding(c, in_k, w);
        for (int w2 = w; w2 < nv; ++w2) {
            if (in_k[at(w2)] || dk[at(w2)] != dist(w, w2)) continue;
            ++r.configurations;
            int worst = 0;
            std::size_t we = 0, we2 = 0;
            bool missing = false;
            for (std::size_t i : exits[at(w)]) {
                for (std::size_t j : exits[at(w2)]) {
                    const int len = pa[i * m + j];
                    if (len < 0) {
                        if (!missing) {
                            we = i;
                            we2 = j;
                        }
                        missing = true;
                    } else if (!missing && len > worst) {
                        worst = len;
                        we = i;
                        we2 = j;
                    }
                }
            }
            if (missing) ++r.no_path;
            const int score = missing ? (1 << 30) : worst;
            if (score <= r.best) continue;
            r.best = score;
            // Witness geodesics through the chosen exit edges, from the least v.
            auto via = [&](std::size_t slot_i, int target) {
                auto [x, y] = c.edges()[at(candidates[slot_i])];
                if (!in_k[at(x)]) std::swap(x, y);
                for (int v : kset) {
                    if (dist(v, x) + 1 + dist(y, target) != dist(v, target)) continue;
                    auto p = least_geodesic(c, dist, v, x);
                    auto q = least_geodesic(c, dist, y, target);
                    p.insert(p.end(), q.begin(), q.end());
                    return p;
                }
                return std::vector<int>{};
            };
            const auto g1 = via(we, w);
            const auto g2 = via(we2, w2);
            r.witness = {{"K", ids(c, kset)},
                         {"v", c.id_of(g1.front())},
                         {"v_prime", c.id_of(g2.front())},
                         {"w", c.id_of(w)},
                         {"w_prime", c.id_of(w2)},
                         {"gamma", ids(c, least_path_avoiding(c, in_k, w, w2))},
                         {"gamma_v_w", ids(c, g1)},
                         {"gamma_v_prime_w_prime", ids(c, g2)},
                         {"exit_edge", {edge_ids(c, candidates[we]).first, edge_ids(c, candidates[we]).second}},
                         {"exit_edge_prime", {edge_ids(c, candidates[we2]).first, edge_ids(c, candidates[we2]).second}},
                         {"length", missing ? json(nullptr) : json(worst)}};
        }
    }
    return r;
}

}  // namespace

SapProbeResult sap_probe(const Complex& c, int n, int radius, std::size_t geodesic_cap) {
    if (n < 0 || radius < 0) throw Error(ErrorKind::InvalidArgument, "n and radius must be non-negative");
    const DistanceMatrix dist(c);
    if (!dist.connected()) throw Error(ErrorKind::Disconnected, "sap_probe needs a connected complex");
    SapProbeResult out;
    out.n = n;
    out.radius = radius;
    if (c.vertex_count() == 0) return out;
    const int centre = centre_of(dist);
    out.centre = c.id_of(centre);
    std::vector<char> ball(c.vertex_count(), 0);
    for (int v = 0; v < static_cast<int>(c.vertex_count()); ++v) ball[at(v)] = dist(centre, v) <= radius;
    std::vector<std::vector<int>> ks;
    for (auto& s : small_connected_sets(c, ball, n)) {
        if (is_convex_fast(c, dist, induced(c, s))) ks.push_back(std::move(s));
    }
    out.subcomplexes = ks.size();
    const auto results = parallel_map(ks.size(), [&](std::size_t i) { return probe_k(c, dist, ks[i], geodesic_cap); });
    int best = -1;
    for (const auto& r : results) {
        out.configurations += r.configurations;
        out.no_path += r.no_path;
        out.exhaustive = out.exhaustive && r.exhaustive;
        if (r.best > best) {
            best = r.best;
            out.witness = r.witness;
        }
    }
    out.vacuous = out.configurations == 0;
    for (const auto& r : results) {
        if (r.best >= 0 && r.best < (1 << 30)) out.r_emp = std::max(out.r_emp, r.best);
    }
    return out;
}

int replay_sap_witness(const Complex& c, const json& witness) {
    const auto kids = witness.at("K").get<std::vector<VertexId>>();
    std::vector<int> kset;
    for (VertexId v : kids) kset.push_back(c.index_of(v));
    const Subcomplex k = induced(c, kset);
    const auto e1 = exit_edge(k, witness.at("gamma_v_w").get<std::vector<VertexId>>());
    const auto e2 = exit_edge(k, witness.at("gamma_v_prime_w_prime").get<std::vector<VertexId>>());
    return path_around(k, e1.edge, e2.edge).length();
}

CheckReport verify_sap_bound(const SapProbeResult& probe, int N) {
    if (!probe.exhaustive) throw Error(ErrorKind::NonExhaustiveProbe, "probe exceeded its geodesic cap");
    const long long bound = static_cast<long long>(probe.n) * N * N;
    json stats = {{"n", probe.n}, {"N", N}, {"bound", bound}, {"r_emp", probe.r_emp}, {"no_path", probe.no_path}};
    if (probe.no_path == 0 && probe.r_emp <= bound) return CheckReport::pass("sap_bound", stats);
    json witness = probe.witness;
    if (witness.is_null()) witness = json::object();
    witness["reason"] = probe.no_path > 0 ? "exit edges not joined around K" : "r_emp exceeds n*N^2";
    return CheckReport::fail("sap_bound", witness, stats);
}

json to_json(const SapProbeResult& r) {
    return {{"n", r.n},
            {"radius", r.radius},
            {"centre", r.centre},
            {"r_emp", r.r_emp},
            {"exhaustive", r.exhaustive},
            {"vacuous", r.vacuous},
            {"subcomplexes", r.subcomplexes},
            {"configurations", r.configurations},
            {"no_path", r.no_path},
            {"truncation", "boundary points approximated by vertices of the finite complex"},
            {"witness", r.witness}};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> embedded_cycles(const Complex& c, int max_length) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(c.vertex_count());
    std::vector<int> path;
    std::vector<char> on(at(n), 0);
    std::vector<int> ds;
    std::function<void()> extend = [&] {
        const int s = path[0];
        const int last = path.back();
        const int len = static_cast<int>(path.size());
        if (len >= 3 && c.adjacent(last, s) && path[1] < last) out.push_back(path);
        if (len == max_length) return;
        for (int x : c.neighbors(last)) {
            if (x <= s || on[at(x)]) continue;
            // The walk must still be able to return to s.
            if (ds[at(x)] > max_length - len) continue;
            path.push_back(x);
            on[at(x)] = 1;
            extend();
            on[at(x)] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        ds = bfs_distances(c, s);
        path = {s};
        on[at(s)] = 1;
        extend();
        on[at(s)] = 0;
    }
    return out;
}

std::optional<std::array<std::vector<VertexId>, 6>> as_hexagon(const Complex& c, const DistanceMatrix& dist,
                                                               const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    auto vertex = [&](std::size_t i) { return cycle[i % len]; };
    std::array<std::vector<VertexId>, 6> sides;
    std::size_t start = 0;
    int used = 0;
    while (start < len) {
        if (used == 6) return std::nullopt;
        std::size_t end = start + 1;
        while (end < len && dist(vertex(start), vertex(end + 1)) == static_cast<int>(end + 1 - start)) ++end;
        for (std::size_t i = start; i <= end; ++i) sides[at(used)].push_back(c.id_of(vertex(i)));
        ++used;
        start = end;
    }
    for (int i = used; i < 6; ++i) sides[at(i)] = {c.id_of(cycle[0])};
    return sides;
}

CheckReport tight_hexagon_probe(const Complex& c, int N, const HexagonSampling& spec) {
    const DistanceMatrix dist(c);
    auto cycles = embedded_cycles(c, spec.max_perimeter);
    const std::size_t total_cycles = cycles.size();
    if (!spec.exhaustive && spec.samples < cycles.size()) {
        std::mt19937_64 rng(spec.seed);
        std::shuffle(cycles.begin(), cycles.end(), rng);
        cycles.resize(spec.samples);
        std::sort(cycles.begin(), cycles.end());
    }
    struct Outcome {
        std::size_t hexagons = 0;
        int mult = 0;
        int deg = 0;
        int area = 0;
        json witness;
    };
    // Fixed chunking keeps per-chunk search memos independent of thread count.
    const std::size_t chunks = std::min<std::size_t>(cycles.size(), 64);
    auto parts = parallel_map(chunks, [&](std::size_t chunk) {
        Outcome o;
        std::unique_ptr<DiagramSearcher> searcher;
        if (!c.simplicial()) searcher = std::make_unique<DiagramSearcher>(c);
        for (std::size_t i = chunk; i < cycles.size(); i += chunks) {
            const auto& cyc = cycles[i];
            for (std::size_t r = 0; r < cyc.size(); ++r) {
                std::vector<int> rot(cyc.begin() + static_cast<std::ptrdiff_t>(r), cyc.end());
                rot.insert(rot.end(), cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(r));
                const auto hex = as_hexagon(c, dist, rot);
                if (!hex) continue;
                ++o.hexagons;
                DiscDiagram d;
                if (c.simplicial()) {
                    d = fill_hexagon(c, *hex);
                } else {
                    std::optional<DiscDiagram> found;
                    for (int cap = 4;; cap *= 2) {
                        const int used = std::min(cap, spec.area_cap);
                        if (searcher->min_area(ids(c, rot), used)) {
                            found = searcher->search(ids(c, rot), used);
                            break;
                        }
                        if (used == spec.area_cap) {
                            throw Error(ErrorKind::NotFillable, "hexagon not fillable within area " + std::to_string(used));
                        }
                    }
                    d = std::move(*found);
                }
                const int mult = multiplicity(d);
                const int deg = max_degree(d);
                o.mult = std::max(o.mult, mult);
                o.deg = std::max(o.deg, deg);
                o.area = std::max(o.area, d.area());
                if (o.witness.is_null() && !verify_tight(d, N).passed()) {
                    json sides = json::array();
                    for (const auto& s : *hex) sides.push_back(s);
                    o.witness = {{"cycle", ids(c, rot)}, {"sides", sides}, {"multiplicity", mult}, {"max_degree", deg}};
                }
            }
        }
        return o;
    });
    std::size_t hexagons = 0;
    int mult = 0, deg = 0, area = 0;
    json witness;
    for (const auto& o : parts) {
        hexagons += o.hexagons;
        mult = std::max(mult, o.mult);
        deg = std::max(deg, o.deg);
        area = std::max(area, o.area);
        if (witness.is_null()) witness = o.witness;
    }
    json stats = {{"N", N},
                  {"max_perimeter", spec.max_perimeter},
                  {"exhaustive", spec.exhaustive || spec.samples >= total_cycles},
                  {"cycles", cycles.size()},
                  {"hexagons", hexagons},
                  {"max_multiplicity", mult},
                  {"max_degree", deg},
                  {"max_area", area},
                  {"empirical_N", std::max(mult, deg)}};
    if (witness.is_null()) return CheckReport::pass("tight_hexagons", stats);
    return CheckReport::fail("tight_hexagons", witness, stats);
}

}  // namespace npc
