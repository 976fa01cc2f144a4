#include "npc/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "npc/error.hpp"

namespace npc {

std::vector<int> bfs_distances(const Complex& complex, int source) {
    std::vector<int> dist(complex.vertex_count(), kUnreachable);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : complex.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Complex& complex) : n_(complex.vertex_count()), d_(n_ * n_) {
    for (std::size_t a = 0; a < n_; ++a) {
        const auto row = bfs_distances(complex, static_cast<int>(a));
        std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(a * n_));
    }
}

bool DistanceMatrix::connected() const {
    return std::find(d_.begin(), d_.end(), kUnreachable) == d_.end();
}

int DistanceMatrix::checked(int a, int b) const {
    const int d = (*this)(a, b);
    if (d == kUnreachable) {
        throw Error(ErrorKind::Disconnected,
                    "vertex indices " + std::to_string(a) + " and " + std::to_string(b) + " are not connected");
    }
    return d;
}

std::vector<std::pair<VertexId, int>> distances(const Complex& complex, VertexId u) {
    const auto d = bfs_distances(complex, complex.index_of(u));
    std::vector<std::pair<VertexId, int>> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != kUnreachable) out.emplace_back(complex.id_of(static_cast<int>(i)), d[i]);
    }
    return out;
}

int distance(const Complex& complex, VertexId u, VertexId v) {
    const int vi = complex.index_of(v);
    const auto d = bfs_distances(complex, complex.index_of(u));
    if (d[static_cast<std::size_t>(vi)] == kUnreachable) {
        throw Error(ErrorKind::Disconnected,
                    "no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    return d[static_cast<std::size_t>(vi)];
}

OrientedGeodesic OrientedGeodesic::reversed() const {
    return OrientedGeodesic{{vertices.rbegin(), vertices.rend()}};
}

bool is_geodesic(const Complex& complex, const DistanceMatrix& dist, std::span<const int> path) {
    if (path.empty()) return false;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!complex.adjacent(path[i - 1], path[i])) return false;
    }
    return dist(path.front(), path.back()) == static_cast<int>(path.size()) - 1;
}

OrientedGeodesic certify_geodesic(const Complex& complex, std::vector<VertexId> vertices) {
    if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "a geodesic needs at least one vertex");
    std::vector<int> path;
    for (VertexId v : vertices) path.push_back(complex.index_of(v));
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!complex.adjacent(path[i - 1], path[i])) {
            throw Error(ErrorKind::InvalidArgument, "consecutive vertices " + std::to_string(vertices[i - 1]) + "," +
                                                        std::to_string(vertices[i]) + " are not adjacent");
        }
    }
    const auto d = bfs_distances(complex, path.front());
    if (d[static_cast<std::size_t>(path.back())] != static_cast<int>(path.size()) - 1) {
        throw Error(ErrorKind::InvalidArgument, "path of length " + std::to_string(path.size() - 1) +
                                                    " is longer than the distance between its ends");
    }
    return OrientedGeodesic{std::move(vertices)};
}

std::vector<int> interval_indices(const Complex& complex, const DistanceMatrix& dist, int u, int v) {
    const int duv = dist.checked(u, v);
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(complex.vertex_count()); ++x) {
        if (dist(u, x) != kUnreachable && dist(u, x) + dist(x, v) == duv) out.push_back(x);
    }
    return out;
}

Interval interval(const Complex& complex, VertexId u, VertexId v) {
    const int ui = complex.index_of(u);
    const int vi = complex.index_of(v);
    const auto du = bfs_distances(complex, ui);
    const auto dv = bfs_distances(complex, vi);
    const int duv = du[static_cast<std::size_t>(vi)];
    if (duv == kUnreachable) {
        throw Error(ErrorKind::Disconnected, "no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    Interval out;
    out.source = u;
    out.target = v;
    out.length = duv;
    for (std::size_t x = 0; x < du.size(); ++x) {
        if (du[x] != kUnreachable && du[x] + dv[x] == duv) {
            out.vertices.push_back(complex.id_of(static_cast<int>(x)));
            out.distance_pairs.emplace_back(du[x], dv[x]);
        }
    }
    return out;
}

namespace {

// Successors of x on geodesics towards v: neighbours one step closer to v.
template <class F>
void for_each_step(const Complex& complex, const DistanceMatrix& dist, int x, int v, F&& f) {
    const int dx = dist(x, v);
    for (int y : complex.neighbors(x)) {
        if (dist(y, v) == dx - 1) f(y);
    }
}

}  // namespace

std::vector<std::vector<int>> geodesic_paths(const Complex& complex, const DistanceMatrix& dist, int u, int v,
                                             std::size_t cap) {
    dist.checked(u, v);
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    // Iterative DFS over the interval DAG; neighbours are visited in increasing order.
    auto recurse = [&](auto&& self, int x) -> void {
        if (x == v) {
            if (out.size() >= cap) {
                throw Error(ErrorKind::CapExceeded,
                            "more than " + std::to_string(cap) + " geodesics (count so far " +
                                std::to_string(out.size()) + ")");
            }
            out.push_back(path);
            return;
        }
        for_each_step(complex, dist, x, v, [&](int y) {
            path.push_back(y);
            self(self, y);
            path.pop_back();
        });
    };
    recurse(recurse, u);
    return out;
}

std::vector<OrientedGeodesic> enumerate_geodesics(const Complex& complex, VertexId u, VertexId v,
                                                  std::size_t cap) {
    const DistanceMatrix dist(complex);
    const auto paths = geodesic_paths(complex, dist, complex.index_of(u), complex.index_of(v), cap);
    std::vector<OrientedGeodesic> out;
    out.reserve(paths.size());
    for (const auto& p : paths) {
        OrientedGeodesic g;
        for (int x : p) g.vertices.push_back(complex.id_of(x));
        out.push_back(std::move(g));
    }
    return out;
}

std::size_t count_geodesics(const Complex& complex, const DistanceMatrix& dist, int u, int v) {
    const int duv = dist.checked(u, v);
    auto verts = interval_indices(complex, dist, u, v);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return dist(u, a) < dist(u, b); });
    std::vector<std::size_t> count(complex.vertex_count(), 0);
    count[static_cast<std::size_t>(u)] = 1;
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    for (int x : verts) {
        if (x == u) continue;
        std::size_t total = 0;
        for (int y : complex.neighbors(x)) {
            if (dist(u, y) == dist(u, x) - 1 && dist(u, y) + dist(y, v) == duv) {
                const std::size_t c = count[static_cast<std::size_t>(y)];
                total = (total > kMax - c) ? kMax : total + c;
            }
        }
        count[static_cast<std::size_t>(x)] = total;
    }
    return count[static_cast<std::size_t>(v)];
}

std::vector<int> least_geodesic(const Complex& complex, const DistanceMatrix& dist, int u, int v) {
    dist.checked(u, v);
    std::vector<int> path{u};
    int x = u;
    while (x != v) {
        int next = -1;
        for_each_step(complex, dist, x, v, [&](int y) {
            if (next < 0) next = y;
        });
        x = next;
        path.push_back(x);
    }
    return path;
}

bool is_convex_fast(const Complex& complex, const DistanceMatrix& dist, const Subcomplex& k) {
    const auto vs = k.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const int a = vs[i];
            const int b = vs[j];
            if (dist(a, b) == kUnreachable) return false;
            for (int x : interval_indices(complex, dist, a, b)) {
                if (!k.has_vertex(x)) return false;
                for (int y : complex.neighbors(x)) {
                    if (dist(a, y) == dist(a, x) + 1 && dist(y, b) == dist(x, b) - 1 &&
                        !k.has_edge(complex.edge_index(x, y))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

CheckReport is_convex(const Complex& complex, const Subcomplex& k, std::size_t cap) {
    const DistanceMatrix dist(complex);
    const auto vs = k.vertices();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const int a = vs[i];
            const int b = vs[j];
            for (const auto& path : geodesic_paths(complex, dist, a, b, cap)) {
                ++checked;
                bool inside = true;
                for (std::size_t s = 0; s < path.size() && inside; ++s) {
                    if (!k.has_vertex(path[s])) inside = false;
                    if (s > 0 && !k.has_edge(complex.edge_index(path[s - 1], path[s]))) inside = false;
                }
                if (!inside) {
                    json g = json::array();
                    for (int x : path) g.push_back(complex.id_of(x));
                    return CheckReport::fail("is_convex", {{"geodesic", g}}, {{"geodesics_checked", checked}});
                }
            }
        }
    }
    return CheckReport::pass("is_convex", {{"geodesics_checked", checked}, {"vertices", vs.size()}});
}

// ---------------------------------------------------------------------------

std::string_view to_string(DeltaMethod method) {
    return method == DeltaMethod::SlimTriangles ? "slim-triangles-exhaustive" : "four-point-exhaustive";
}

namespace {

// Largest achievable min_{x in g} d(p, x) over geodesics g from a to c
// (a widest-path DP over the interval DAG).
int farthest_geodesic(const Complex& complex, const DistanceMatrix& dist, int p, int a, int c) {
    auto verts = interval_indices(complex, dist, a, c);
    std::sort(verts.begin(), verts.end(), [&](int x, int y) { return dist(a, x) < dist(a, y); });
    std::vector<int> best(complex.vertex_count(), -1);
    const int dac = dist(a, c);
    for (int x : verts) {
        if (x == a) {
            best[static_cast<std::size_t>(x)] = dist(p, a);
            continue;
        }
        int b = -1;
        for (int y : complex.neighbors(x)) {
            if (dist(a, y) == dist(a, x) - 1 && dist(a, y) + dist(y, c) == dac) {
                b = std::max(b, best[static_cast<std::size_t>(y)]);
            }
        }
        best[static_cast<std::size_t>(x)] = std::min(b, dist(p, x));
    }
    return best[static_cast<std::size_t>(c)];
}

template <class F>
int slim_value(const Complex& complex, const DistanceMatrix& dist, int x, int y, int z, F&& far) {
    int eps = 0;
    const int tri[3] = {x, y, z};
    for (int s = 0; s < 3; ++s) {
        const int a = tri[s];
        const int b = tri[(s + 1) % 3];
        const int c = tri[(s + 2) % 3];
        for (int p : interval_indices(complex, dist, a, b)) {
            eps = std::max(eps, std::min(far(p, c, a), far(p, c, b)));
        }
    }
    return 2 * eps;
}

}  // namespace

int slim_triangle_twice_delta(const Complex& complex, const DistanceMatrix& dist, int x, int y, int z) {
    return slim_value(complex, dist, x, y, z,
                      [&](int p, int a, int c) { return farthest_geodesic(complex, dist, p, a, c); });
}

int four_point_twice_delta(const DistanceMatrix& dist, int x, int y, int z, int w) {
    int s[3] = {dist(x, y) + dist(z, w), dist(x, z) + dist(y, w), dist(x, w) + dist(y, z)};
    std::sort(s, s + 3);
    return s[2] - s[1];
}

DeltaEstimate delta_estimate(const Complex& complex, DeltaMethod method) {
    const DistanceMatrix dist(complex);
    if (!dist.connected()) throw Error(ErrorKind::Disconnected, "delta estimate needs a connected complex");
    const int n = static_cast<int>(complex.vertex_count());
    DeltaEstimate out;
    out.method = method;
    if (method == DeltaMethod::FourPoint) {
        int best = -1;
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y)
                for (int z = y; z < n; ++z)
                    for (int w = z; w < n; ++w) {
                        const int v = four_point_twice_delta(dist, x, y, z, w);
                        if (v > best) {
                            best = v;
                            out.witness = {complex.id_of(x), complex.id_of(y), complex.id_of(z), complex.id_of(w)};
                        }
                    }
        out.twice_delta = std::max(best, 0);
        return out;
    }
    // far[(a*n + c)*n + p] = farthest_geodesic(p, a, c)
    std::vector<int> far(static_cast<std::size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            for (int p = 0; p < n; ++p) {
                far[(static_cast<std::size_t>(a) * n + c) * n + p] = farthest_geodesic(complex, dist, p, a, c);
            }
        }
    }
    auto lookup = [&](int p, int a, int c) { return far[(static_cast<std::size_t>(a) * n + c) * n + p]; };
    int best = -1;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z) {
                const int v = slim_value(complex, dist, x, y, z, lookup);
                if (v > best) {
                    best = v;
                    out.witness = {complex.id_of(x), complex.id_of(y), complex.id_of(z)};
                }
            }
    out.twice_delta = std::max(best, 0);
    return out;
}

json to_json(const OrientedGeodesic& g) { return g.vertices; }

json to_json(const Interval& i) {
    json pairs = json::array();
    for (const auto& [a, b] : i.distance_pairs) pairs.push_back({a, b});
    return {{"source", i.source}, {"target", i.target}, {"length", i.length},
            {"size", i.size()},   {"vertices", i.vertices}, {"distances", pairs}};
}

json to_json(const DeltaEstimate& d) {
    return {{"delta", d.value()}, {"twice_delta", d.twice_delta}, {"method", to_string(d.method)},
            {"witness", d.witness}};
}

}  // namespace npc
