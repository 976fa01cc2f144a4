#include "npc/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "npc/error.hpp"
#include "npc/smallcancel.hpp"
#include "npc/words.hpp"

namespace npc {

int hex_distance(Axial a, Axial b) {
    const int di = a.i - b.i;
    const int dj = a.j - b.j;
    return std::max({std::abs(di), std::abs(dj), std::abs(di + dj)});
}

namespace {

constexpr Axial kDirections[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Triangulated lattice patch on the given points, ids = positions in `pts`.
Complex lattice_patch(const std::vector<Axial>& pts) {
    std::map<std::pair<int, int>, VertexId> id;
    for (std::size_t k = 0; k < pts.size(); ++k) id[{pts[k].i, pts[k].j}] = static_cast<VertexId>(k);
    auto lookup = [&](int i, int j) -> VertexId {
        auto it = id.find({i, j});
        return it == id.end() ? -1 : it->second;
    };
    std::vector<VertexId> vertices;
    EdgeList edges;
    std::vector<Walk> triangles;
    for (const auto& p : pts) {
        const VertexId a = lookup(p.i, p.j);
        vertices.push_back(a);
        for (const auto& d : {Axial{1, 0}, Axial{0, 1}, Axial{1, -1}}) {
            const VertexId b = lookup(p.i + d.i, p.j + d.j);
            if (b >= 0) edges.emplace_back(a, b);
        }
        const VertexId right = lookup(p.i + 1, p.j);
        const VertexId up = lookup(p.i, p.j + 1);
        const VertexId back = lookup(p.i - 1, p.j + 1);
        if (right >= 0 && up >= 0) triangles.push_back({a, right, up});
        if (up >= 0 && back >= 0) triangles.push_back({a, up, back});
    }
    return Complex::make(ComplexKind::Simplicial, std::move(vertices), std::move(edges), std::move(triangles));
}

}  // namespace

std::vector<Axial> equilateral_disc_coordinates(int r) {
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "disc radius must be non-negative");
    std::vector<Axial> pts{{0, 0}};
    for (int k = 1; k <= r; ++k) {
        Axial p{k, 0};
        for (int side = 0; side < 6; ++side) {
            const Axial d = kDirections[(side + 2) % 6];
            for (int s = 0; s < k; ++s) {
                pts.push_back(p);
                p = {p.i + d.i, p.j + d.j};
            }
        }
    }
    return pts;
}

Complex gen_equilateral_disc(int r) { return lattice_patch(equilateral_disc_coordinates(r)); }

Complex gen_flat_parallelogram(int p, int q) {
    if (p < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "parallelogram sides must be >= 1");
    std::vector<Axial> pts;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) pts.push_back({i, j});
    return lattice_patch(pts);
}

Complex gen_tree(int branching, int depth) {
    if (branching < 1 || depth < 0) throw Error(ErrorKind::InvalidArgument, "tree needs branching >= 1, depth >= 0");
    std::vector<VertexId> vertices{0};
    EdgeList edges;
    std::vector<VertexId> level{0};
    VertexId next = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<VertexId> children;
        for (VertexId v : level) {
            for (int b = 0; b < branching; ++b) {
                vertices.push_back(next);
                edges.emplace_back(v, next);
                children.push_back(next++);
            }
        }
        level = std::move(children);
    }
    return Complex::make(ComplexKind::Simplicial, std::move(vertices), std::move(edges), {});
}

Complex gen_cycle_graph(int k) {
    if (k < 3) throw Error(ErrorKind::InvalidArgument, "cycle length must be >= 3");
    std::vector<VertexId> vertices;
    EdgeList edges;
    for (int i = 0; i < k; ++i) {
        vertices.push_back(i);
        edges.emplace_back(i, (i + 1) % k);
    }
    return Complex::make(ComplexKind::Simplicial, std::move(vertices), std::move(edges), {});
}

Complex gen_polygon(int k) {
    if (k < 3) throw Error(ErrorKind::InvalidArgument, "polygon length must be >= 3");
    const Complex c = gen_cycle_graph(k);
    Walk w;
    for (int i = 0; i < k; ++i) w.push_back(i);
    return Complex::make(ComplexKind::Polygonal, c.vertex_ids(), c.raw_edges(), {w});
}

Complex gen_join_lines(int r) {
    if (r < 1) throw Error(ErrorKind::InvalidArgument, "join-lines radius must be >= 1");
    const int n = 2 * r + 1;
    auto a = [](int k) { return static_cast<VertexId>(k); };
    auto b = [n](int k) { return static_cast<VertexId>(n + k); };
    std::vector<VertexId> vertices;
    EdgeList edges;
    std::vector<Walk> triangles;
    for (int k = 0; k < 2 * n; ++k) vertices.push_back(k);
    for (int k = 0; k + 1 < n; ++k) {
        edges.emplace_back(a(k), a(k + 1));
        edges.emplace_back(b(k), b(k + 1));
    }
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) edges.emplace_back(a(k), b(l));
    for (int k = 0; k + 1 < n; ++k) {
        for (int l = 0; l < n; ++l) {
            triangles.push_back({a(k), a(k + 1), b(l)});
            triangles.push_back({b(k), b(k + 1), a(l)});
        }
    }
    return Complex::make(ComplexKind::Simplicial, std::move(vertices), std::move(edges), std::move(triangles));
}

Presentation surface_presentation(int genus) {
    if (genus < 1 || genus > 13) throw Error(ErrorKind::InvalidArgument, "genus must be in 1..13");
    std::vector<std::string> gens;
    std::string rel;
    for (int g = 0; g < genus; ++g) {
        const char x = static_cast<char>('a' + 2 * g);
        const char y = static_cast<char>('a' + 2 * g + 1);
        gens.emplace_back(1, x);
        gens.emplace_back(1, y);
        rel += {x, y, words::inverse_letter(x), words::inverse_letter(y)};
    }
    return Presentation::make(std::move(gens), {rel});
}

// ---------------------------------------------------------------------------

namespace {

class ElementTable {
public:
    explicit ElementTable(const DehnSolver& dehn) : dehn_(dehn) {
        const auto& p = dehn.presentation();
        balanced_ = std::all_of(p.relators.begin(), p.relators.end(), [&](const std::string& r) {
            return exponent_sums(r) == std::vector<int>(p.generators.size(), 0);
        });
    }

    // Index of the element represented by `word`, adding it if new.
    int intern(const std::string& word) {
        const std::string key = dehn_.reduce_linear(word);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        const auto bucket_key = balanced_ ? exponent_sums(key) : std::vector<int>{};
        auto& bucket = buckets_[bucket_key];
        const std::string inv = words::inverse(key);
        for (int e : bucket) {
            if (dehn_.is_trivial(words::inverse(reps_[static_cast<std::size_t>(e)]) + key)) {
                cache_[key] = e;
                return e;
            }
        }
        const int id = static_cast<int>(reps_.size());
        reps_.push_back(key);
        bucket.push_back(id);
        cache_[key] = id;
        return id;
    }

    const std::string& word(int e) const { return reps_[static_cast<std::size_t>(e)]; }
    std::size_t size() const { return reps_.size(); }

private:
    std::vector<int> exponent_sums(const std::string& w) const {
        const auto& gens = dehn_.presentation().generators;
        std::vector<int> s(gens.size(), 0);
        for (char c : w) {
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (gens[g][0] == words::generator_of(c)) s[g] += (c == gens[g][0]) ? 1 : -1;
            }
        }
        return s;
    }

    const DehnSolver& dehn_;
    bool balanced_ = false;
    std::vector<std::string> reps_;
    std::map<std::string, int> cache_;
    std::map<std::vector<int>, std::vector<int>> buckets_;
};

}  // namespace

Complex gen_cayley_ball(const Presentation& p, int r) {
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "ball radius must be non-negative");
    const DehnSolver dehn(p);
    ElementTable table(dehn);
    std::vector<std::string> letters;
    for (const auto& g : p.generators) {
        letters.push_back(g);
        letters.emplace_back(1, words::inverse_letter(g[0]));
    }
    std::set<std::string> conj;
    for (const auto& rel : p.relators) {
        for (const auto& w : {rel, words::inverse(rel)}) {
            for (std::size_t s = 0; s < w.size(); ++s) conj.insert(words::rotate(w, s));
        }
    }
    std::vector<char> in_ball;
    auto add = [&](const std::string& w) {
        const int e = table.intern(w);
        if (in_ball.size() <= static_cast<std::size_t>(e)) in_ball.resize(static_cast<std::size_t>(e) + 1, 0);
        in_ball[static_cast<std::size_t>(e)] = 1;
    };
    add("");
    for (int k = 0; k < r; ++k) {
        const std::size_t current = table.size();
        std::vector<int> members;
        for (std::size_t e = 0; e < current; ++e) {
            if (in_ball[e]) members.push_back(static_cast<int>(e));
        }
        for (int e : members) {
            const std::string g = table.word(e);
            for (const auto& x : letters) add(g + x);
            for (const auto& c : conj) {
                for (std::size_t t = 1; t < c.size(); ++t) add(g + c.substr(0, t));
            }
        }
    }
    // Look-up without growing the ball.
    auto find = [&](const std::string& w) -> int {
        const int e = table.intern(w);
        return (static_cast<std::size_t>(e) < in_ball.size() && in_ball[static_cast<std::size_t>(e)]) ? e : -1;
    };
    std::vector<int> members;
    for (std::size_t e = 0; e < in_ball.size(); ++e) {
        if (in_ball[e]) members.push_back(static_cast<int>(e));
    }
    std::vector<VertexId> vertices(members.begin(), members.end());
    EdgeList edges;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (int e : members) {
        for (const auto& g : p.generators) {
            const int f = find(table.word(e) + g);
            if (f < 0) continue;
            if (f == e) throw Error(ErrorKind::NotSimplicial, "generator " + g + " acts trivially (loop edge)");
            const std::pair<VertexId, VertexId> key{std::min(e, f), std::max(e, f)};
            if (!seen.insert(key).second) {
                throw Error(ErrorKind::NotSimplicial, "two generator edges join the same pair of elements");
            }
            edges.emplace_back(key);
        }
    }
    std::vector<Walk> polygons;
    std::set<Walk> seen_cells;
    for (int e : members) {
        for (const auto& rel : p.relators) {
            Walk w;
            bool inside = true;
            for (std::size_t t = 0; t < rel.size() && inside; ++t) {
                const int f = find(table.word(e) + rel.substr(0, t));
                if (f < 0) inside = false;
                w.push_back(f);
            }
            if (!inside) continue;
            auto canon = canonical_cycle<VertexId>(w);
            if (seen_cells.insert(canon).second) polygons.push_back(std::move(w));
        }
    }
    return Complex::make(ComplexKind::Polygonal, std::move(vertices), std::move(edges), std::move(polygons));
}

// ---------------------------------------------------------------------------

GeneratedDiagram gen_ladder_diagram(const LadderSpec& spec) {
    const int n = static_cast<int>(spec.lengths.size());
    if (n == 0) throw Error(ErrorKind::InvalidSpec, "ladder needs at least one element");
    for (int i = 0; i < n; ++i) {
        const int m = spec.lengths[static_cast<std::size_t>(i)];
        if (m != 1 && m < 3) throw Error(ErrorKind::InvalidSpec, "element " + std::to_string(i) + " has length " + std::to_string(m));
    }
    std::vector<int> rung(static_cast<std::size_t>(std::max(n - 1, 0)), -1);
    for (const auto& g : spec.gluings) {
        const int lo = std::min(g.a, g.b);
        const int hi = std::max(g.a, g.b);
        if (lo < 0 || hi >= n) throw Error(ErrorKind::InvalidSpec, "gluing refers to a missing element");
        if (hi - lo != 1) {
            throw Error(ErrorKind::InvalidSpec, "elements " + std::to_string(lo) + " and " + std::to_string(hi) +
                                                    " are not consecutive");
        }
        if (rung[static_cast<std::size_t>(lo)] >= 0) throw Error(ErrorKind::InvalidSpec, "elements glued twice");
        if (g.rung < 0) throw Error(ErrorKind::InvalidSpec, "negative rung length");
        rung[static_cast<std::size_t>(lo)] = g.rung;
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (rung[static_cast<std::size_t>(i)] < 0) {
            throw Error(ErrorKind::InvalidSpec, "elements " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                                    " are not glued");
        }
    }
    // Per element: left rung a, bottom rail s, right rung b, top rail; a free
    // edge is treated as a 2-gon with two unit rails.
    struct Layout {
        int m, a, s, b;
        std::vector<int> v;  // builder-independent vertex numbers per position
    };
    std::vector<Layout> lay;
    for (int i = 0; i < n; ++i) {
        const int len = spec.lengths[static_cast<std::size_t>(i)];
        const int m = len == 1 ? 2 : len;
        const int a = i > 0 ? rung[static_cast<std::size_t>(i - 1)] : 0;
        const int b = i + 1 < n ? rung[static_cast<std::size_t>(i)] : 0;
        if (len == 1 && (a != 0 || b != 0)) throw Error(ErrorKind::InvalidSpec, "a free edge can only be glued at a vertex");
        if (m - a - b < 2) throw Error(ErrorKind::InvalidSpec, "rungs of element " + std::to_string(i) + " leave no rails");
        lay.push_back({m, a, (m - a - b + 1) / 2, b, {}});
    }
    // Union-find over (element, position).
    std::vector<int> parent;
    for (auto& l : lay) {
        for (int k = 0; k < l.m; ++k) {
            l.v.push_back(static_cast<int>(parent.size()));
            parent.push_back(static_cast<int>(parent.size()));
        }
    }
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int i = 0; i + 1 < n; ++i) {
        const auto& L = lay[static_cast<std::size_t>(i)];
        const auto& R = lay[static_cast<std::size_t>(i + 1)];
        const int b = L.b;
        for (int t = 0; t <= b; ++t) {
            const int x = L.v[static_cast<std::size_t>((L.a + L.s + t) % L.m)];
            const int y = R.v[static_cast<std::size_t>((b - t) % R.m)];
            parent[static_cast<std::size_t>(find(x))] = find(y);
        }
    }
    // Dense ids in order of first appearance along the elements.
    std::map<int, VertexId> dense;
    auto id = [&](int x) {
        const int root = find(x);
        auto it = dense.find(root);
        if (it != dense.end()) return it->second;
        const VertexId v = static_cast<VertexId>(dense.size());
        dense[root] = v;
        return v;
    };
    std::vector<Walk> walks;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        const auto& l = lay[static_cast<std::size_t>(i)];
        Walk w;
        for (int k = 0; k < l.m; ++k) w.push_back(id(l.v[static_cast<std::size_t>(k)]));
        if (spec.lengths[static_cast<std::size_t>(i)] == 1) {
            edges.emplace_back(w[0], w[1]);
        } else {
            for (int k = 0; k < l.m; ++k) edges.emplace_back(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>((k + 1) % l.m)]);
            walks.push_back(w);
        }
    }
    std::vector<VertexId> vertices;
    for (VertexId v = 0; v < static_cast<VertexId>(dense.size()); ++v) vertices.push_back(v);
    std::sort(edges.begin(), edges.end(), [](auto x, auto y) { return std::minmax(x.first, x.second) < std::minmax(y.first, y.second); });
    edges.erase(std::unique(edges.begin(), edges.end(), [](auto x, auto y) { return std::minmax(x.first, x.second) == std::minmax(y.first, y.second); }), edges.end());
    GeneratedDiagram out;
    out.target = Complex::make(ComplexKind::Polygonal, vertices, edges, walks);

    DiagramBuilder builder(out.target);
    for (VertexId v : vertices) builder.add_vertex(v);
    for (const auto& w : walks) builder.add_cell(std::vector<int>(w.begin(), w.end()));
    std::vector<int> boundary;
    auto emit = [&](int i, int from, int to) {  // positions from..to inclusive, cyclic
        const auto& l = lay[static_cast<std::size_t>(i)];
        for (int k = from; k <= to; ++k) boundary.push_back(static_cast<int>(id(l.v[static_cast<std::size_t>(k % l.m)])));
    };
    emit(0, 0, lay[0].a + lay[0].s);
    for (int i = 1; i < n; ++i) emit(i, lay[static_cast<std::size_t>(i)].a, lay[static_cast<std::size_t>(i)].a + lay[static_cast<std::size_t>(i)].s);
    {
        const auto& l = lay[static_cast<std::size_t>(n - 1)];
        emit(n - 1, l.a + l.s, l.m);
    }
    for (int i = n - 2; i >= 0; --i) {
        const auto& l = lay[static_cast<std::size_t>(i)];
        emit(i, l.a + l.s + l.b, l.m);
    }
    std::vector<int> clean;
    for (int v : boundary) {
        if (clean.empty() || clean.back() != v) clean.push_back(v);
    }
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    out.diagram = builder.build(clean);
    out.diagram.target = "ladder";
    return out;
}

GeneratedDiagram gen_random_triangulated_disc(int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    using Tri = std::array<int, 3>;
    std::vector<Tri> tris{{0, 1, 2}};
    std::vector<int> boundary{0, 1, 2};
    std::set<std::pair<int, int>> edge_set{{0, 1}, {1, 2}, {0, 2}};
    int next = 3;
    auto key = [](int a, int b) { return std::pair<int, int>{std::min(a, b), std::max(a, b)}; };
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    for (int step = 0; step < steps; ++step) {
        const int move = static_cast<int>(rng() % 4);
        const std::size_t bn = boundary.size();
        if (move == 0) {  // ear on a boundary edge
            const std::size_t i = pick(bn);
            const int a = boundary[i];
            const int b = boundary[(i + 1) % bn];
            const int x = next++;
            tris.push_back({b, a, x});
            edge_set.insert(key(a, x));
            edge_set.insert(key(b, x));
            boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(i + 1), x);
        } else if (move == 1 && bn > 3) {  // fill a boundary corner
            const std::size_t i = pick(bn);
            const int a = boundary[(i + bn - 1) % bn];
            const int b = boundary[i];
            const int c = boundary[(i + 1) % bn];
            if (edge_set.count(key(a, c))) continue;
            tris.push_back({a, c, b});
            edge_set.insert(key(a, c));
            boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(i));
        } else if (move == 2) {  // stellar subdivision
            const std::size_t t = pick(tris.size());
            const Tri old = tris[t];
            const int x = next++;
            tris[t] = {old[0], old[1], x};
            tris.push_back({old[1], old[2], x});
            tris.push_back({old[2], old[0], x});
            for (int v : old) edge_set.insert(key(v, x));
        } else if (move == 3) {  // flip an interior edge
            const std::size_t t = pick(tris.size());
            const int k = static_cast<int>(rng() % 3);
            const int x = tris[t][static_cast<std::size_t>(k)];
            const int y = tris[t][static_cast<std::size_t>((k + 1) % 3)];
            const int z = tris[t][static_cast<std::size_t>((k + 2) % 3)];
            std::size_t u = tris.size();
            int w = -1;
            for (std::size_t s = 0; s < tris.size(); ++s) {
                for (int q = 0; q < 3; ++q) {
                    if (tris[s][static_cast<std::size_t>(q)] == y && tris[s][static_cast<std::size_t>((q + 1) % 3)] == x) {
                        u = s;
                        w = tris[s][static_cast<std::size_t>((q + 2) % 3)];
                    }
                }
            }
            if (u == tris.size() || edge_set.count(key(z, w))) continue;
            tris[t] = {x, w, z};
            tris[u] = {w, y, z};
            edge_set.erase(key(x, y));
            edge_set.insert(key(z, w));
        }
    }
    std::vector<VertexId> vertices;
    for (int v = 0; v < next; ++v) vertices.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> edges(edge_set.begin(), edge_set.end());
    std::vector<Walk> walks;
    for (const auto& t : tris) walks.push_back({t[0], t[1], t[2]});
    GeneratedDiagram out;
    out.target = Complex::make(ComplexKind::Simplicial, vertices, edges, walks);
    DiagramBuilder builder(out.target);
    for (VertexId v : vertices) builder.add_vertex(v);
    for (const auto& t : tris) builder.add_cell({t[0], t[1], t[2]});
    out.diagram = builder.build(boundary);
    out.diagram.target = "random-disc";
    return out;
}

}  // namespace npc
