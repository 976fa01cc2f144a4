#include "npc/wsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "npc/parallel.hpp"

namespace npc {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_flag(const Complex& c) {
    if (!c.simplicial()) throw Error(ErrorKind::KindMismatch, "weak systolicity needs a simplicial complex");
    auto flag = is_flag(c);
    if (!flag.passed()) throw Error(ErrorKind::NotFlag, "empty clique " + flag.witness.dump());
}

std::vector<VertexId> ids(const Complex& c, const std::vector<int>& idx) {
    std::vector<VertexId> out;
    for (int i : idx) out.push_back(c.id_of(i));
    return out;
}

int common_neighbour_at(const Complex& c, int a, int b, const std::vector<int>& dist, int level) {
    const auto& na = c.neighbors(a);
    const auto& nb = c.neighbors(b);
    std::vector<int> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
    for (int x : common) {
        if (dist[at(x)] == level) return x;
    }
    return -1;
}

CheckReport edge_condition(const Complex& c, int v, int max_radius) {
    const auto dist = bfs_distances(c, v);
    // Report the failure at the least radius, then least edge.
    std::vector<std::tuple<int, int, int>> order;
    for (const auto& [a, b] : c.edges()) {
        const int n = dist[at(a)];
        if (n < 1 || n != dist[at(b)] || (max_radius >= 0 && n > max_radius)) continue;
        order.emplace_back(n, a, b);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [n, a, b] : order) {
        if (common_neighbour_at(c, a, b, dist, n - 1) < 0) {
            return CheckReport::fail("edge_condition",
                                     {{"condition", "E"}, {"v", c.id_of(v)}, {"n", n}, {"edge", {c.id_of(a), c.id_of(b)}}},
                                     {{"v", c.id_of(v)}, {"edges_checked", order.size()}});
        }
    }
    return CheckReport::pass("edge_condition", {{"v", c.id_of(v)}, {"edges_checked", order.size()}});
}

CheckReport vertex_condition(const Complex& c, int v, int max_radius) {
    const auto dist = bfs_distances(c, v);
    std::vector<std::pair<int, int>> order;
    for (int w = 0; w < static_cast<int>(c.vertex_count()); ++w) {
        const int n = dist[at(w)];
        if (n < 1 || (max_radius >= 0 && n > max_radius)) continue;
        order.emplace_back(n, w);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [n, w] : order) {
        std::vector<int> down;
        for (int x : c.neighbors(w)) {
            if (dist[at(x)] == n - 1) down.push_back(x);
        }
        for (std::size_t i = 0; i < down.size(); ++i) {
            for (std::size_t j = i + 1; j < down.size(); ++j) {
                if (!c.adjacent(down[i], down[j])) {
                    return CheckReport::fail("vertex_condition",
                                             {{"condition", "V"},
                                              {"v", c.id_of(v)},
                                              {"n", n},
                                              {"vertex", c.id_of(w)},
                                              {"pair", {c.id_of(down[i]), c.id_of(down[j])}}},
                                             {{"v", c.id_of(v)}, {"vertices_checked", order.size()}});
                }
            }
        }
    }
    return CheckReport::pass("vertex_condition", {{"v", c.id_of(v)}, {"vertices_checked", order.size()}});
}

WsysReport run_wsys(const Complex& c, int max_radius) {
    require_flag(c);
    const std::size_t n = c.vertex_count();
    auto results = parallel_map(n, [&](std::size_t v) {
        return std::make_pair(edge_condition(c, static_cast<int>(v), max_radius),
                              vertex_condition(c, static_cast<int>(v), max_radius));
    });
    WsysReport r;
    r.local = max_radius >= 0;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& [e, x] = results[v];
        r.outcomes.push_back({c.id_of(static_cast<int>(v)), e.passed(), x.passed()});
        if (!r.witness.is_null()) continue;
        if (!e.passed()) {
            r.witness = e.witness;
        } else if (!x.passed()) {
            r.witness = x.witness;
        }
    }
    return r;
}

}  // namespace

CheckReport check_edge_condition(const Complex& complex, VertexId v, int max_radius) {
    require_flag(complex);
    return edge_condition(complex, complex.index_of(v), max_radius);
}

CheckReport check_vertex_condition(const Complex& complex, VertexId v, int max_radius) {
    require_flag(complex);
    return vertex_condition(complex, complex.index_of(v), max_radius);
}

CheckReport WsysReport::to_report() const {
    int e_fail = 0;
    int v_fail = 0;
    for (const auto& o : outcomes) {
        e_fail += !o.edge_ok;
        v_fail += !o.vertex_ok;
    }
    json stats = {{"vertices", outcomes.size()},
                  {"radii", local ? "1..3" : "all"},
                  {"edge_condition_failures", e_fail},
                  {"vertex_condition_failures", v_fail}};
    const std::string name = local ? "locally_weakly_systolic" : "weakly_systolic";
    if (passed()) return CheckReport::pass(name, stats);
    return CheckReport::fail(name, witness, stats);
}

WsysReport check_weakly_systolic(const Complex& complex) { return run_wsys(complex, -1); }
WsysReport check_locally(const Complex& complex) { return run_wsys(complex, 3); }

CheckReport check_systolic(const Complex& c) {
    require_flag(c);
    const int n = static_cast<int>(c.vertex_count());
    std::size_t checked = 0;
    std::vector<int> path;
    json witness;
    // Cycles are enumerated from their least vertex with path[1] < path.back().
    std::function<bool(int)> extend = [&](int len) -> bool {
        const int s = path[0];
        const int last = path.back();
        if (len >= 4 && c.adjacent(last, s) && path[1] < last) {
            ++checked;
            bool chord = false;
            for (int i = 0; i < len && !chord; ++i) {
                for (int j = i + 2; j < len && !chord; ++j) {
                    if (i == 0 && j == len - 1) continue;
                    chord = c.adjacent(path[at(i)], path[at(j)]);
                }
            }
            if (!chord) {
                witness = {{"cycle", ids(c, path)}, {"length", len}};
                return true;
            }
        }
        if (len == 5) return false;
        for (int x : c.neighbors(last)) {
            if (x <= s || std::find(path.begin(), path.end(), x) != path.end()) continue;
            path.push_back(x);
            if (extend(len + 1)) return true;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        if (extend(1)) return CheckReport::fail("systolic", witness, {{"cycles_checked", checked}});
    }
    return CheckReport::pass("systolic", {{"cycles_checked", checked}});
}

// ---------------------------------------------------------------------------

namespace {

bool in_interval(const DistanceMatrix& d, int a, int b, int x) { return d(a, x) + d(x, b) == d(a, b); }

// Vertex of I(a,b) ∩ I(a,c) farthest from a, least index on ties.
int quasi_median(const DistanceMatrix& d, int a, int b, int c) {
    int best = a;
    for (int x = 0; x < static_cast<int>(d.size()); ++x) {
        if (!in_interval(d, a, b, x) || !in_interval(d, a, c, x)) continue;
        if (d(a, x) > d(a, best)) best = x;
    }
    return best;
}

}  // namespace

bool is_metric_triangle(const Complex& complex, const DistanceMatrix& d, int a, int b, int c) {
    (void)complex;
    for (int x = 0; x < static_cast<int>(d.size()); ++x) {
        const bool ab = in_interval(d, a, b, x);
        const bool bc = in_interval(d, b, c, x);
        const bool ca = in_interval(d, c, a, x);
        if (ab && bc && x != b) return false;
        if (bc && ca && x != c) return false;
        if (ca && ab && x != a) return false;
    }
    return true;
}

MetricTriangle metric_triangle(const Complex& complex, VertexId u, VertexId v, VertexId w) {
    const DistanceMatrix d(complex);
    const int a = complex.index_of(u);
    const int b = complex.index_of(v);
    const int c = complex.index_of(w);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) d.checked(x, y);
    const int a1 = quasi_median(d, a, b, c);
    const int b1 = quasi_median(d, b, c, a);
    const int c1 = quasi_median(d, c, a, b);
    MetricTriangle t{u, v, w, complex.id_of(a1), complex.id_of(b1), complex.id_of(c1), {d(a1, b1), d(b1, c1), d(c1, a1)}};
    if (!is_metric_triangle(complex, d, a1, b1, c1)) {
        throw Error(ErrorKind::NotMetricTriangle, "quasi-medians " + std::to_string(t.u1) + "," + std::to_string(t.v1) +
                                                      "," + std::to_string(t.w1) + " do not form a metric triangle");
    }
    return t;
}

CheckReport check_weak_modularity(const Complex& c) {
    const DistanceMatrix d(c);
    const int n = static_cast<int>(c.vertex_count());
    struct Partial {
        std::size_t count = 0;
        int max_size = 0;
        json witness;
    };
    auto parts = parallel_map(at(n), [&](std::size_t ai) {
        Partial p;
        const int a = static_cast<int>(ai);
        for (int b = a + 1; b < n; ++b) {
            for (int x = b + 1; x < n; ++x) {
                if (d(a, b) < 0 || d(b, x) < 0 || d(a, x) < 0) continue;
                if (!is_metric_triangle(c, d, a, b, x)) continue;
                ++p.count;
                const std::array<int, 3> t{a, b, x};
                p.max_size = std::max({p.max_size, d(a, b), d(b, x), d(x, a)});
                if (!p.witness.is_null()) continue;
                if (!(d(a, b) == d(b, x) && d(b, x) == d(x, a))) {
                    p.witness = {{"triangle", ids(c, {a, b, x})},
                                 {"sides", {d(a, b), d(b, x), d(x, a)}},
                                 {"reason", "not equilateral"}};
                    continue;
                }
                for (int k = 0; k < 3 && p.witness.is_null(); ++k) {
                    const int apex = t[at(k)];
                    const int p1 = t[at((k + 1) % 3)];
                    const int p2 = t[at((k + 2) % 3)];
                    int ref = -1;
                    for (int y = 0; y < n; ++y) {
                        if (!in_interval(d, p1, p2, y)) continue;
                        if (ref < 0) {
                            ref = y;
                        } else if (d(apex, y) != d(apex, ref)) {
                            p.witness = {{"triangle", ids(c, {a, b, x})},
                                         {"apex", c.id_of(apex)},
                                         {"x", c.id_of(ref)},
                                         {"y", c.id_of(y)},
                                         {"distances", {d(apex, ref), d(apex, y)}}};
                            break;
                        }
                    }
                }
            }
        }
        return p;
    });
    std::size_t count = 0;
    int max_size = 0;
    json witness;
    for (const auto& p : parts) {
        count += p.count;
        max_size = std::max(max_size, p.max_size);
        if (witness.is_null()) witness = p.witness;
    }
    json stats = {{"metric_triangles", count}, {"max_size", max_size}};
    if (witness.is_null()) return CheckReport::pass("weak_modularity", stats);
    return CheckReport::fail("weak_modularity", witness, stats);
}

json to_json(const MetricTriangle& t) {
    return {{"input", {t.u, t.v, t.w}},
            {"quasi_medians", {t.u1, t.v1, t.w1}},
            {"sides", t.sides},
            {"equilateral", t.equilateral()}};
}

// ---------------------------------------------------------------------------

std::optional<FlatDisc> flat_disc(const Complex& c, const std::vector<VertexId>& g1_ids,
                                  const std::vector<VertexId>& g2_ids) {
    const std::size_t len = g1_ids.size();
    if (len < 3 || g2_ids.size() != len) return std::nullopt;
    std::vector<int> g1, g2;
    for (std::size_t i = 0; i < len; ++i) {
        g1.push_back(c.index_of(g1_ids[i]));
        g2.push_back(c.index_of(g2_ids[i]));
    }
    const int n = static_cast<int>(len) - 1;
    const int v = g1[0];
    const int u = g1[at(n)];
    if (g2[0] != v || g2[at(n)] != u) return std::nullopt;
    const auto du = bfs_distances(c, u);
    std::vector<std::vector<int>> layers{{v}};
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < n; ++i) {
        const auto& p = layers.back();
        std::vector<int> next;
        if (i == 0) {
            next = {g1[1], g2[1]};
            if (g1[1] != g2[1]) tris.push_back({v, g1[1], g2[1]});
        } else {
            const std::size_t k = p.size() - 1;
            std::vector<int> x;
            for (std::size_t j = 0; j < k; ++j) {
                const int y = common_neighbour_at(c, p[j], p[j + 1], du, n - i - 1);
                if (y < 0) return std::nullopt;
                x.push_back(y);
            }
            next.push_back(g1[at(i + 1)]);
            next.insert(next.end(), x.begin(), x.end());
            next.push_back(g2[at(i + 1)]);
            next.erase(std::unique(next.begin(), next.end()), next.end());
            for (std::size_t j = 0; j < k; ++j) tris.push_back({p[j], p[j + 1], x[j]});
            if (k == 0 || x.empty()) return std::nullopt;
            if (g1[at(i + 1)] != x.front()) tris.push_back({p[0], g1[at(i + 1)], x.front()});
            for (std::size_t j = 0; j + 1 < k; ++j) {
                if (x[j] != x[j + 1]) tris.push_back({p[j + 1], x[j], x[j + 1]});
            }
            if (g2[at(i + 1)] != x.back()) tris.push_back({p[k], x.back(), g2[at(i + 1)]});
        }
        layers.push_back(std::move(next));
    }
    if (layers.back() != std::vector<int>{u}) return std::nullopt;
    // Embedding: every vertex occurs once; triangles are cells.
    std::set<int> seen;
    for (const auto& layer : layers) {
        for (int x : layer) {
            if (!seen.insert(x).second) return std::nullopt;
        }
    }
    FlatDisc f;
    for (const auto& t : tris) {
        std::array<VertexId, 3> l{c.id_of(t[0]), c.id_of(t[1]), c.id_of(t[2])};
        if (!match_cell(c, l)) return std::nullopt;
        f.triangles.push_back(l);
    }
    for (const auto& layer : layers) f.layers.push_back(ids(c, layer));
    return f;
}

namespace {

// Shared state while assembling a filling.
struct Filler {
    const Complex& c;
    DistanceMatrix dist;
    DiagramBuilder b;
    std::unique_ptr<DiagramSearcher> searcher;

    explicit Filler(const Complex& complex) : c(complex), dist(complex), b(complex) {}

    DiagramSearcher& oracle() {
        if (!searcher) searcher = std::make_unique<DiagramSearcher>(c);
        return *searcher;
    }

    std::vector<int> handles(const std::vector<VertexId>& labels) {
        std::vector<int> h;
        for (VertexId l : labels) h.push_back(b.add_vertex(l));
        return h;
    }

    std::vector<VertexId> labels(const std::vector<int>& h) const {
        std::vector<VertexId> out;
        for (int x : h) out.push_back(b.label(x));
        return out;
    }

    int idx(VertexId id) const { return c.index_of(id); }

    std::vector<VertexId> least(int from, int to) const { return ids(c, least_geodesic(c, dist, from, to)); }

    void oracle_fill(const std::vector<int>& loop, int cap) {
        try {
            oracle().fill_into(b, loop, cap);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotFillable) throw;
            throw Error(ErrorKind::FillFailed, "oracle found no filling: " + e.message());
        }
    }

    // Bigon between two geodesics of handles with the same ends.
    void bigon(const std::vector<int>& h1, const std::vector<int>& h2, BigonBackend backend) {
        const auto l1 = labels(h1);
        const auto l2 = labels(h2);
        if (l1.size() != l2.size() || l1.front() != l2.front() || l1.back() != l2.back()) {
            throw Error(ErrorKind::FillFailed, "bigon sides do not share their endpoints");
        }
        std::vector<std::size_t> common;
        for (std::size_t i = 0; i < l1.size(); ++i) {
            if (l1[i] == l2[i]) {
                b.merge(h1[i], h2[i]);
                common.push_back(i);
            }
        }
        for (std::size_t k = 0; k + 1 < common.size(); ++k) {
            const std::size_t i = common[k];
            const std::size_t j = common[k + 1];
            if (j == i + 1) continue;
            std::vector<VertexId> s1(l1.begin() + static_cast<std::ptrdiff_t>(i), l1.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            std::vector<VertexId> s2(l2.begin() + static_cast<std::ptrdiff_t>(i), l2.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            std::optional<FlatDisc> flat;
            if (backend == BigonBackend::Structured) flat = flat_disc(c, s1, s2);
            if (flat) {
                std::map<VertexId, int> h;
                for (std::size_t t = i; t <= j; ++t) {
                    h[l1[t]] = h1[t];
                    h[l2[t]] = h2[t];
                }
                for (const auto& layer : flat->layers) {
                    for (VertexId x : layer) {
                        if (!h.count(x)) h[x] = b.add_vertex(x);
                    }
                }
                for (const auto& t : flat->triangles) b.add_cell({h.at(t[0]), h.at(t[1]), h.at(t[2])});
                continue;
            }
            std::vector<int> loop(h1.begin() + static_cast<std::ptrdiff_t>(i), h1.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            for (std::size_t t = j - 1; t > i; --t) loop.push_back(h2[t]);
            const int n = static_cast<int>(j - i);
            oracle_fill(loop, n * n / 2);
        }
    }

    // Equilateral filling of a metric triangle; returns its three sides.
    std::array<std::vector<int>, 3> metric_fill(int a, int bb, int cc) {
        const int k = dist(a, bb);
        if (k == 0) {
            const int h = b.add_vertex(c.id_of(a));
            return {std::vector<int>{h}, std::vector<int>{h}, std::vector<int>{h}};
        }
        if (auto layers = lattice_triangle(a, bb, cc, k)) {
            std::map<int, int> h;
            for (const auto& layer : *layers) {
                for (int x : layer) h[x] = b.add_vertex(c.id_of(x));
            }
            for (int i = 0; i < k; ++i) {
                const auto& p = (*layers)[at(i)];
                const auto& q = (*layers)[at(i + 1)];
                for (int j = 0; j <= i; ++j) b.add_cell({h[p[at(j)]], h[q[at(j)]], h[q[at(j + 1)]]});
                for (int j = 0; j < i; ++j) b.add_cell({h[p[at(j)]], h[p[at(j + 1)]], h[q[at(j + 1)]]});
            }
            std::array<std::vector<int>, 3> sides;
            for (int i = 0; i <= k; ++i) sides[0].push_back(h[(*layers)[at(i)][0]]);
            for (int x : layers->back()) sides[1].push_back(h[x]);
            for (int i = k; i >= 0; --i) sides[2].push_back(h[(*layers)[at(i)][at(i)]]);
            return sides;
        }
        std::array<std::vector<int>, 3> sides{handles(least(a, bb)), handles(least(bb, cc)), handles(least(cc, a))};
        b.merge(sides[0].back(), sides[1].front());
        b.merge(sides[1].back(), sides[2].front());
        b.merge(sides[2].back(), sides[0].front());
        std::vector<int> loop = sides[0];
        loop.insert(loop.end(), sides[1].begin() + 1, sides[1].end());
        loop.insert(loop.end(), sides[2].begin() + 1, sides[2].end() - 1);
        oracle_fill(loop, k * k);
        return sides;
    }

    // Layer i holds the vertices at distance i from a, ordered from the side
    // towards bb to the side towards cc.
    std::optional<std::vector<std::vector<int>>> lattice_triangle(int a, int bb, int cc, int k) const {
        auto fits = [&](int x, int i, int j) {
            return dist(a, x) == i && dist(bb, x) == k - i + j && dist(cc, x) == k - j;
        };
        auto pick = [&](const std::vector<int>& from, int i, int j) {
            std::vector<int> cand = c.neighbors(from[0]);
            for (std::size_t t = 1; t < from.size(); ++t) {
                std::vector<int> keep;
                const auto& nb = c.neighbors(from[t]);
                std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(), std::back_inserter(keep));
                cand = std::move(keep);
            }
            for (int x : cand) {
                if (fits(x, i, j)) return x;
            }
            return -1;
        };
        std::vector<std::vector<int>> layers{{a}};
        std::set<int> seen{a};
        for (int i = 0; i < k; ++i) {
            const auto& p = layers.back();
            std::vector<int> q;
            for (int j = 0; j <= i + 1; ++j) {
                std::vector<int> from;
                if (j > 0) from.push_back(p[at(j - 1)]);
                if (j <= i) from.push_back(p[at(j)]);
                const int x = pick(from, i + 1, j);
                if (x < 0 || !seen.insert(x).second) return std::nullopt;
                if (!q.empty() && !c.adjacent(q.back(), x)) return std::nullopt;
                q.push_back(x);
            }
            layers.push_back(std::move(q));
        }
        for (int i = 0; i < k; ++i) {
            const auto& p = layers[at(i)];
            const auto& q = layers[at(i + 1)];
            for (int j = 0; j <= i; ++j) {
                std::array<VertexId, 3> t{c.id_of(p[at(j)]), c.id_of(q[at(j)]), c.id_of(q[at(j + 1)])};
                if (!match_cell(c, t)) return std::nullopt;
            }
            for (int j = 0; j < i; ++j) {
                std::array<VertexId, 3> t{c.id_of(p[at(j)]), c.id_of(p[at(j + 1)]), c.id_of(q[at(j + 1)])};
                if (!match_cell(c, t)) return std::nullopt;
            }
        }
        if (layers.back().front() != bb || layers.back().back() != cc) return std::nullopt;
        return layers;
    }

    bool composite_ok(int from, int m1, int m2, int to) const {
        return dist(from, m1) + dist(m1, m2) + dist(m2, to) == dist(from, to);
    }

    // Triangle with sides of handles: s[0] u->v, s[1] v->w, s[2] w->u.
    void triangle(const std::array<std::vector<int>, 3>& s) {
        const int u = idx(b.label(s[0].front()));
        const int v = idx(b.label(s[1].front()));
        const int w = idx(b.label(s[2].front()));
        int u1 = quasi_median(dist, u, v, w);
        int v1 = quasi_median(dist, v, w, u);
        int w1 = quasi_median(dist, w, u, v);
        auto usable = [&] {
            return is_metric_triangle(c, dist, u1, v1, w1) && composite_ok(u, u1, v1, v) && composite_ok(v, v1, w1, w) &&
                   composite_ok(w, w1, u1, u);
        };
        if (!usable()) {
            v1 = quasi_median(dist, v, u1, w);
            w1 = quasi_median(dist, w, u1, v1);
            if (!usable()) {
                throw Error(ErrorKind::FillFailed, "no metric triangle for " + std::to_string(c.id_of(u)) + "," +
                                                       std::to_string(c.id_of(v)) + "," + std::to_string(c.id_of(w)));
            }
        }
        const auto mid = metric_fill(u1, v1, w1);
        auto leg = [&](int from, int to, int start) {
            auto h = handles(least(from, to));
            b.merge(h.front(), start);
            return h;
        };
        const auto gu = leg(u, u1, s[0].front());
        const auto gv = leg(v, v1, s[1].front());
        const auto gw = leg(w, w1, s[2].front());
        b.merge(gu.back(), mid[0].front());
        b.merge(gv.back(), mid[1].front());
        b.merge(gw.back(), mid[2].front());
        auto around = [](const std::vector<int>& in, const std::vector<int>& side, const std::vector<int>& out) {
            std::vector<int> p = in;
            p.insert(p.end(), side.begin() + 1, side.end());
            p.insert(p.end(), out.rbegin() + 1, out.rend());
            return p;
        };
        bigon(s[0], around(gu, mid[0], gv), BigonBackend::Structured);
        bigon(s[1], around(gv, mid[1], gw), BigonBackend::Structured);
        bigon(s[2], around(gw, mid[2], gu), BigonBackend::Structured);
    }
};

std::vector<int> closed_boundary(const std::vector<std::vector<int>>& sides) {
    std::vector<int> out{sides.front().front()};
    for (const auto& s : sides) out.insert(out.end(), s.begin() + 1, s.end());
    out.pop_back();
    if (out.empty()) out.push_back(sides.front().front());
    return out;
}

std::vector<VertexId> certified(const Complex& c, const std::vector<VertexId>& path, const char* what) {
    try {
        return certify_geodesic(c, path).vertices;
    } catch (const Error& e) {
        throw Error(ErrorKind::FillFailed, std::string(what) + " is not a geodesic: " + e.message());
    }
}

void check_bounds(const DiscDiagram& d) {
    const int mult = multiplicity(d);
    const int deg = max_degree(d);
    if (mult > 4 || deg > 14) {
        throw BoundViolation("triangle filling has multiplicity " + std::to_string(mult) + " and max degree " +
                                 std::to_string(deg) + " (bounds 4 and 14)",
                             d);
    }
}

}  // namespace

DiscDiagram fill_bigon(const Complex& complex, const OrientedGeodesic& g1, const OrientedGeodesic& g2,
                       BigonBackend backend) {
    const auto l1 = certified(complex, g1.vertices, "g1");
    const auto l2 = certified(complex, g2.vertices, "g2");
    if (l1.front() != l2.front() || l1.back() != l2.back()) {
        throw Error(ErrorKind::FillFailed, "geodesics do not share both endpoints");
    }
    Filler f(complex);
    const auto h1 = f.handles(l1);
    const auto h2 = f.handles(l2);
    f.bigon(h1, h2, backend);
    std::vector<int> reversed(h2.rbegin(), h2.rend());
    return f.b.build(closed_boundary({h1, reversed}));
}

DiscDiagram fill_triangle(const Complex& complex, const std::array<std::vector<VertexId>, 3>& sides) {
    std::array<std::vector<VertexId>, 3> l;
    for (int i = 0; i < 3; ++i) l[at(i)] = certified(complex, sides[at(i)], "triangle side");
    for (int i = 0; i < 3; ++i) {
        if (l[at(i)].back() != l[at((i + 1) % 3)].front()) throw Error(ErrorKind::FillFailed, "triangle sides do not close up");
    }
    Filler f(complex);
    std::array<std::vector<int>, 3> h{f.handles(l[0]), f.handles(l[1]), f.handles(l[2])};
    for (int i = 0; i < 3; ++i) f.b.merge(h[at(i)].back(), h[at((i + 1) % 3)].front());
    f.triangle(h);
    auto d = f.b.build(closed_boundary({h[0], h[1], h[2]}));
    check_bounds(d);
    return d;
}

DiscDiagram fill_triangle(const Complex& complex, VertexId u, VertexId v, VertexId w) {
    const DistanceMatrix d(complex);
    const int a = complex.index_of(u);
    const int b = complex.index_of(v);
    const int c = complex.index_of(w);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) d.checked(x, y);
    return fill_triangle(complex, {ids(complex, least_geodesic(complex, d, a, b)), ids(complex, least_geodesic(complex, d, b, c)),
                                   ids(complex, least_geodesic(complex, d, c, a))});
}

DiscDiagram fill_hexagon(const Complex& complex, const std::array<std::vector<VertexId>, 6>& sides) {
    std::array<std::vector<VertexId>, 6> l;
    for (int i = 0; i < 6; ++i) l[at(i)] = certified(complex, sides[at(i)], "hexagon side");
    for (int i = 0; i < 6; ++i) {
        if (l[at(i)].back() != l[at((i + 1) % 6)].front()) throw Error(ErrorKind::FillFailed, "hexagon sides do not close up");
    }
    Filler f(complex);
    std::array<std::vector<int>, 6> h;
    for (int i = 0; i < 6; ++i) h[at(i)] = f.handles(l[at(i)]);
    for (int i = 0; i < 6; ++i) f.b.merge(h[at(i)].back(), h[at((i + 1) % 6)].front());
    const int x0 = f.idx(l[0].front());
    auto diagonal = [&](int corner) {
        auto d = f.handles(f.least(x0, f.idx(l[at(corner)].front())));
        f.b.merge(d.front(), h[0].front());
        f.b.merge(d.back(), h[at(corner)].front());
        return d;
    };
    const auto d2 = diagonal(2);
    const auto d3 = diagonal(3);
    const auto d4 = diagonal(4);
    auto rev = [](std::vector<int> x) {
        std::reverse(x.begin(), x.end());
        return x;
    };
    f.triangle({h[0], h[1], rev(d2)});
    f.triangle({d2, h[2], rev(d3)});
    f.triangle({d3, h[3], rev(d4)});
    f.triangle({d4, h[4], h[5]});
    return f.b.build(closed_boundary({h[0], h[1], h[2], h[3], h[4], h[5]}));
}

}  // namespace npc
