#include "npc/diagram.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "npc/error.hpp"

namespace npc {

namespace {

using Dart = std::pair<int, int>;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Which face uses each dart: cell index, or -1 for the outer face.
struct DartMap {
    std::map<Dart, int> face;
    std::map<Dart, int> position;  // index within its face walk
    std::vector<Dart> duplicates;
};

DartMap dart_map(const DiscDiagram& d) {
    DartMap m;
    auto put = [&](Dart dart, int face, int pos) {
        auto [it, fresh] = m.face.emplace(dart, face);
        if (!fresh) {
            m.duplicates.push_back(dart);
            return;
        }
        m.position[dart] = pos;
    };
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
        const auto& w = d.cells[c].walk;
        for (std::size_t i = 0; i < w.size(); ++i) put({w[i], w[(i + 1) % w.size()]}, static_cast<int>(c), static_cast<int>(i));
    }
    const auto& b = d.boundary;
    if (b.size() >= 2) {
        for (std::size_t i = 0; i < b.size(); ++i) put({b[(i + 1) % b.size()], b[i]}, -1, static_cast<int>(i));
    }
    return m;
}

// Next dart along the face that uses `dart`.
Dart next_in_face(const DiscDiagram& d, const DartMap& m, Dart dart) {
    const int f = m.face.at(dart);
    const int i = m.position.at(dart);
    if (f >= 0) {
        const auto& w = d.cells[at(f)].walk;
        const std::size_t n = w.size();
        return {w[(at(i) + 1) % n], w[(at(i) + 2) % n]};
    }
    // Outer face walks the boundary backwards: dart i is (b[i+1], b[i]).
    const auto& b = d.boundary;
    const std::size_t n = b.size();
    const std::size_t j = (at(i) + n - 1) % n;
    return {b[(j + 1) % n], b[j]};
}

std::vector<int> boundary_vertex_flags(const DiscDiagram& d) {
    std::vector<int> flag(d.vertex_count(), 0);
    for (int v : d.boundary) {
        if (v >= 0 && at(v) < flag.size()) flag[at(v)] = 1;
    }
    return flag;
}

}  // namespace

std::vector<std::pair<int, int>> DiscDiagram::edges() const {
    std::set<std::pair<int, int>> s;
    auto add = [&](int a, int b) {
        if (a != b) s.insert(std::minmax(a, b));
    };
    for (const auto& c : cells) {
        for (std::size_t i = 0; i < c.walk.size(); ++i) add(c.walk[i], c.walk[(i + 1) % c.walk.size()]);
    }
    for (std::size_t i = 0; i + 1 < boundary.size() + 1 && boundary.size() >= 2; ++i) {
        add(boundary[i], boundary[(i + 1) % boundary.size()]);
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<int>> DiscDiagram::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count());
    for (const auto& [a, b] : edges()) {
        if (a < 0 || b < 0 || at(a) >= adj.size() || at(b) >= adj.size()) continue;
        adj[at(a)].push_back(b);
        adj[at(b)].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::optional<CellMatch> match_cell(const Complex& target, std::span<const VertexId> labels) {
    const std::size_t m = labels.size();
    if (m < 3 || !target.has_vertex(labels[0]) || !target.has_vertex(labels[1])) return std::nullopt;
    const int e = target.edge_index(target.index_of(labels[0]), target.index_of(labels[1]));
    if (e < 0) return std::nullopt;
    for (int c : target.cells_of_edge(e)) {
        const auto& tw = target.cell_walks()[at(c)];
        if (tw.size() != m) continue;
        const auto it = std::find(tw.begin(), tw.end(), labels[0]);
        if (it == tw.end()) continue;
        const std::size_t o = static_cast<std::size_t>(it - tw.begin());
        for (int dir = 0; dir < 2; ++dir) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                const std::size_t k = dir == 0 ? (o + i) % m : (o + m - i) % m;
                ok = tw[k] == labels[i];
            }
            if (ok) return CellMatch{c, static_cast<int>(o), dir == 1};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

int DiagramBuilder::add_vertex(VertexId label) {
    labels_.push_back(label);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(labels_.size()) - 1;
}

int DiagramBuilder::find(int v) const {
    while (parent_[at(v)] != v) {
        parent_[at(v)] = parent_[at(parent_[at(v)])];
        v = parent_[at(v)];
    }
    return v;
}

void DiagramBuilder::merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (labels_[at(a)] != labels_[at(b)]) {
        throw Error(ErrorKind::FillFailed, "merging diagram vertices with labels " + std::to_string(labels_[at(a)]) +
                                               " and " + std::to_string(labels_[at(b)]));
    }
    if (b < a) std::swap(a, b);
    parent_[at(b)] = a;
}

void DiagramBuilder::add_cell(const std::vector<int>& walk) {
    std::vector<VertexId> labels;
    for (int v : walk) labels.push_back(label(v));
    if (!match_cell(*target_, labels)) {
        std::string s;
        for (auto l : labels) s += (s.empty() ? "" : ",") + std::to_string(l);
        throw Error(ErrorKind::FillFailed, "no target cell with boundary " + s);
    }
    cells_.push_back(walk);
}

DiscDiagram DiagramBuilder::build(const std::vector<int>& boundary_in) const {
    // Dense numbering: boundary first, then cells.
    std::map<int, int> dense;
    std::vector<VertexId> labels;
    auto id = [&](int v) {
        const int r = find(v);
        auto [it, fresh] = dense.emplace(r, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(labels_[at(r)]);
        return it->second;
    };
    std::vector<int> boundary;
    for (int v : boundary_in) boundary.push_back(id(v));
    std::vector<std::vector<int>> walks;
    for (const auto& w : cells_) {
        std::vector<int> x;
        for (int v : w) x.push_back(id(v));
        walks.push_back(std::move(x));
    }
    const std::size_t n = walks.size();
    // Orient cells so that neighbours traverse shared edges oppositely.
    std::map<std::pair<int, int>, std::vector<int>> edge_cells;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& w = walks[c];
        for (std::size_t i = 0; i < w.size(); ++i) edge_cells[std::minmax(w[i], w[(i + 1) % w.size()])].push_back(static_cast<int>(c));
    }
    auto traverses = [&](std::size_t c, int a, int b) {
        const auto& w = walks[c];
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == a && w[(i + 1) % w.size()] == b) return true;
        }
        return false;
    };
    auto flip = [&](std::size_t c) {
        auto& w = walks[c];
        std::reverse(w.begin() + 1, w.end());
    };
    std::vector<int> component(n, -1);
    std::vector<std::vector<int>> members;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        const int comp = static_cast<int>(members.size());
        members.emplace_back();
        std::deque<std::size_t> queue{s};
        component[s] = comp;
        while (!queue.empty()) {
            const std::size_t c = queue.front();
            queue.pop_front();
            members[at(comp)].push_back(static_cast<int>(c));
            const auto w = walks[c];
            for (std::size_t i = 0; i < w.size(); ++i) {
                const int a = w[i];
                const int b = w[(i + 1) % w.size()];
                for (int o : edge_cells[std::minmax(a, b)]) {
                    if (component[at(o)] >= 0) continue;
                    if (traverses(at(o), a, b)) flip(at(o));
                    component[at(o)] = comp;
                    queue.push_back(at(o));
                }
            }
        }
    }
    // Align components with the boundary (the boundary darts run along cells).
    bool boundary_fixed = false;
    for (const auto& mem : members) {
        std::set<int> in(mem.begin(), mem.end());
        int decision = 0;  // +1 agrees, -1 opposite
        for (std::size_t i = 0; i < boundary.size() && boundary.size() >= 2 && decision == 0; ++i) {
            const int a = boundary[i];
            const int b = boundary[(i + 1) % boundary.size()];
            auto it = edge_cells.find(std::minmax(a, b));
            if (it == edge_cells.end()) continue;
            std::vector<int> mine;
            for (int c : it->second) {
                if (in.count(c)) mine.push_back(c);
            }
            if (mine.size() != 1) continue;
            decision = traverses(at(mine[0]), a, b) ? 1 : -1;
        }
        if (decision == 0) continue;
        if (decision < 0) {
            if (!boundary_fixed) {
                std::reverse(boundary.begin() + 1, boundary.end());
            } else {
                for (int c : mem) flip(at(c));
            }
        }
        boundary_fixed = true;
    }
    DiscDiagram d;
    d.labels = std::move(labels);
    d.boundary = std::move(boundary);
    for (auto& w : walks) {
        std::vector<VertexId> l;
        for (int v : w) l.push_back(d.labels[at(v)]);
        const auto match = match_cell(*target_, l);
        DiagramCell cell;
        cell.walk = std::move(w);
        cell.target_cell = match->cell;
        cell.offset = match->offset;
        cell.reflected = match->reflected;
        d.cells.push_back(std::move(cell));
    }
    return d;
}

// ---------------------------------------------------------------------------

CheckReport validate_planar(const DiscDiagram& d) {
    const char* name = "validate_diagram";
    const int nv = static_cast<int>(d.vertex_count());
    auto in_range = [&](int v) { return v >= 0 && v < nv; };
    if (nv == 0) return CheckReport::fail(name, {{"type", "empty_diagram"}});
    if (d.boundary.empty()) return CheckReport::fail(name, {{"type", "empty_boundary"}});
    for (int v : d.boundary) {
        if (!in_range(v)) return CheckReport::fail(name, {{"type", "unknown_vertex"}, {"vertex", v}});
    }
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
        const auto& w = d.cells[c].walk;
        if (w.size() < 3) return CheckReport::fail(name, {{"type", "bad_cell_length"}, {"cell", c}});
        std::set<int> seen;
        for (int v : w) {
            if (!in_range(v)) return CheckReport::fail(name, {{"type", "unknown_vertex"}, {"vertex", v}, {"cell", c}});
            if (!seen.insert(v).second) return CheckReport::fail(name, {{"type", "non_embedded_cell"}, {"cell", c}});
        }
    }
    if (d.boundary.size() == 1) {
        if (nv == 1 && d.cells.empty()) return CheckReport::pass(name, {{"vertices", 1}, {"edges", 0}, {"cells", 0}});
        return CheckReport::fail(name, {{"type", "bad_boundary"}, {"reason", "single-vertex boundary around a larger diagram"}});
    }
    for (std::size_t i = 0; i < d.boundary.size(); ++i) {
        if (d.boundary[i] == d.boundary[(i + 1) % d.boundary.size()]) {
            return CheckReport::fail(name, {{"type", "boundary_loop"}, {"position", i}});
        }
    }
    const DartMap m = dart_map(d);
    if (!m.duplicates.empty()) {
        const auto [a, b] = m.duplicates.front();
        return CheckReport::fail(name, {{"type", "dart_used_twice"}, {"dart", {a, b}}});
    }
    for (const auto& [dart, face] : m.face) {
        if (!m.face.count({dart.second, dart.first})) {
            return CheckReport::fail(name, {{"type", "unmatched_dart"}, {"dart", {dart.first, dart.second}}});
        }
    }
    // Vertex rotations: sigma(d) = next_in_face(reverse(d)) must be a single
    // cycle around every vertex.
    std::set<Dart> visited;
    std::vector<int> cycles(at(nv), 0);
    for (const auto& [dart, face] : m.face) {
        if (visited.count(dart)) continue;
        ++cycles[at(dart.first)];
        Dart x = dart;
        while (visited.insert(x).second) x = next_in_face(d, m, {x.second, x.first});
    }
    for (int v = 0; v < nv; ++v) {
        if (cycles[at(v)] != 1) {
            return CheckReport::fail(name, {{"type", cycles[at(v)] == 0 ? "isolated_vertex" : "singular_rotation"},
                                            {"vertex", v},
                                            {"rotation_cycles", cycles[at(v)]}});
        }
    }
    const long long edges = static_cast<long long>(m.face.size() / 2);
    const long long faces = static_cast<long long>(d.cells.size()) + 1;
    const long long chi = nv - edges + faces;
    if (chi != 2) {
        return CheckReport::fail(name, {{"type", "euler_characteristic"},
                                        {"V", nv},
                                        {"E", edges},
                                        {"F", d.cells.size()},
                                        {"V-E+F", chi - 1}});
    }
    return CheckReport::pass(name, {{"vertices", nv}, {"edges", edges}, {"cells", d.cells.size()}});
}

CheckReport validate_diagram(const DiscDiagram& d, const Complex& target) {
    const char* name = "validate_diagram";
    auto planar = validate_planar(d);
    if (!planar.passed()) return planar;
    for (std::size_t v = 0; v < d.labels.size(); ++v) {
        if (!target.has_vertex(d.labels[v])) {
            return CheckReport::fail(name, {{"type", "unknown_label"}, {"vertex", v}, {"label", d.labels[v]}});
        }
    }
    for (const auto& [a, b] : d.edges()) {
        const VertexId la = d.labels[at(a)];
        const VertexId lb = d.labels[at(b)];
        if (la == lb || !target.adjacent(target.index_of(la), target.index_of(lb))) {
            return CheckReport::fail(name, {{"type", "edge_not_mapped_to_edge"}, {"edge", {a, b}}, {"labels", {la, lb}}});
        }
    }
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
        const auto& cell = d.cells[c];
        if (cell.target_cell < 0 || at(cell.target_cell) >= target.cell_count()) {
            return CheckReport::fail(name, {{"type", "unknown_target_cell"}, {"cell", c}});
        }
        const auto& tw = target.cell_walks()[at(cell.target_cell)];
        const int m = static_cast<int>(tw.size());
        if (static_cast<int>(cell.walk.size()) != m) {
            return CheckReport::fail(name, {{"type", "cell_length_mismatch"}, {"cell", c}});
        }
        const int s = cell.reflected ? -1 : 1;
        for (int i = 0; i < m; ++i) {
            const VertexId expected = tw[at((((cell.offset + s * i) % m) + m) % m)];
            if (d.labels[at(cell.walk[at(i)])] != expected) {
                return CheckReport::fail(name, {{"type", "cell_map_mismatch"}, {"cell", c}, {"position", i}});
            }
        }
    }
    planar.stats["area"] = d.area();
    return planar;
}

int area(const DiscDiagram& d) { return d.area(); }

std::vector<int> degrees(const DiscDiagram& d) {
    std::vector<int> deg;
    for (const auto& row : d.adjacency()) deg.push_back(static_cast<int>(row.size()));
    return deg;
}

int max_degree(const DiscDiagram& d) {
    const auto deg = degrees(d);
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int multiplicity(const DiscDiagram& d) {
    std::map<VertexId, int> count;
    int best = 0;
    for (VertexId l : d.labels) best = std::max(best, ++count[l]);
    return best;
}

bool is_singular(const DiscDiagram& d) {
    if (d.boundary.size() < 3) return true;
    std::set<int> s(d.boundary.begin(), d.boundary.end());
    return s.size() != d.boundary.size();
}

CheckReport is_reduced(const DiscDiagram& d) {
    const DartMap m = dart_map(d);
    int shared = 0;
    for (const auto& [dart, face] : m.face) {
        if (face < 0 || dart.first > dart.second) continue;
        auto it = m.face.find({dart.second, dart.first});
        if (it == m.face.end() || it->second < 0) continue;
        ++shared;
        const auto& a = d.cells[at(face)];
        const auto& b = d.cells[at(it->second)];
        if (a.target_cell == b.target_cell) {
            return CheckReport::fail("is_reduced", {{"cells", {face, it->second}},
                                                    {"edge", {dart.first, dart.second}},
                                                    {"target_cell", a.target_cell}});
        }
    }
    return CheckReport::pass("is_reduced", {{"interior_edges_between_cells", shared}});
}

CheckReport verify_tight(const DiscDiagram& d, int n) {
    const int mult = multiplicity(d);
    const int deg = max_degree(d);
    json stats = {{"N", n}, {"multiplicity", mult}, {"max_degree", deg}, {"area", d.area()}};
    if (mult <= n && deg <= n) return CheckReport::pass("verify_tight", stats);
    json witness;
    if (mult > n) witness["multiplicity"] = mult;
    if (deg > n) witness["max_degree"] = deg;
    return CheckReport::fail("verify_tight", witness, stats);
}

// ---------------------------------------------------------------------------

std::vector<Spur> find_spurs(const DiscDiagram& d) {
    const auto adj = d.adjacency();
    std::vector<Spur> out;
    std::set<std::pair<int, int>> seen;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (adj[v].size() != 1) continue;
        const int w = adj[v][0];
        if (!seen.insert(std::minmax(static_cast<int>(v), w)).second) continue;
        out.push_back({static_cast<int>(v), w});
    }
    return out;
}

std::vector<Shell> find_shells(const DiscDiagram& d) {
    std::vector<Shell> out;
    if (d.cells.size() < 2) return out;
    const DartMap m = dart_map(d);
    const auto deg = degrees(d);
    const auto on_boundary = boundary_vertex_flags(d);
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
        const auto& w = d.cells[c].walk;
        const int n = static_cast<int>(w.size());
        std::vector<char> outer(at(n));
        int count = 0;
        for (int i = 0; i < n; ++i) {
            auto it = m.face.find({w[at((i + 1) % n)], w[at(i)]});
            outer[at(i)] = it != m.face.end() && it->second < 0;
            count += outer[at(i)];
        }
        if (count == 0) continue;
        Shell s;
        s.cell = static_cast<int>(c);
        if (count == n) {
            s.outer_path.assign(w.begin(), w.end());
            s.outer_path.push_back(w[0]);
            out.push_back(std::move(s));
            continue;
        }
        int starts = 0;
        int start = 0;
        for (int i = 0; i < n; ++i) {
            if (outer[at(i)] && !outer[at((i + n - 1) % n)]) {
                ++starts;
                start = i;
            }
        }
        if (starts != 1) continue;
        for (int k = 0; k <= count; ++k) s.outer_path.push_back(w[at((start + k) % n)]);
        for (int k = count; k <= n; ++k) s.inner_path.push_back(w[at((start + k) % n)]);
        bool connected = true;
        int arcs = 1;
        for (std::size_t k = 1; k + 1 < s.inner_path.size(); ++k) {
            const int v = s.inner_path[k];
            if (on_boundary[at(v)]) connected = false;
            if (deg[at(v)] >= 3) ++arcs;
        }
        if (!connected || arcs > 3) continue;
        s.internal_arcs = arcs;
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Closed cells of the diagram used by the ladder test: 2-cells and free edges.
struct CellStructure {
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<std::vector<int>> cell_edges;  // per 2-cell
    std::vector<int> free_edges;               // edge ids in no 2-cell
};

CellStructure cell_structure(const DiscDiagram& d) {
    CellStructure s;
    s.edges = d.edges();
    for (std::size_t e = 0; e < s.edges.size(); ++e) s.edge_id[s.edges[e]] = static_cast<int>(e);
    std::vector<char> used(s.edges.size(), 0);
    for (const auto& c : d.cells) {
        std::vector<int> es;
        for (std::size_t i = 0; i < c.walk.size(); ++i) {
            const int e = s.edge_id.at(std::minmax(c.walk[i], c.walk[(i + 1) % c.walk.size()]));
            es.push_back(e);
            used[at(e)] = 1;
        }
        s.cell_edges.push_back(std::move(es));
    }
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        if (!used[e]) s.free_edges.push_back(static_cast<int>(e));
    }
    return s;
}

struct Removal {
    int components = 0;
    std::vector<int> element_component;  // per element, -1 if removed
};

// Components of D minus the closed element `removed`. Elements are the 2-cells
// (0..F-1) followed by the free edges.
Removal remove_element(const DiscDiagram& d, const CellStructure& s, int removed) {
    const int nv = static_cast<int>(d.vertex_count());
    const int ne = static_cast<int>(s.edges.size());
    const int nf = static_cast<int>(d.cells.size());
    std::vector<char> gone_v(at(nv), 0), gone_e(at(ne), 0);
    if (removed < nf) {
        for (int v : d.cells[at(removed)].walk) gone_v[at(v)] = 1;
        for (int e : s.cell_edges[at(removed)]) gone_e[at(e)] = 1;
    } else {
        const int e = s.free_edges[at(removed - nf)];
        gone_e[at(e)] = 1;
        gone_v[at(s.edges[at(e)].first)] = gone_v[at(s.edges[at(e)].second)] = 1;
    }
    // Nodes: vertices, then edges, then 2-cells.
    std::vector<int> parent(at(nv + ne + nf));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[at(x)] == x ? x : parent[at(x)] = find(parent[at(x)]); };
    auto unite = [&](int a, int b) { parent[at(find(a))] = find(b); };
    for (int e = 0; e < ne; ++e) {
        if (gone_e[at(e)]) continue;
        for (int v : {s.edges[at(e)].first, s.edges[at(e)].second}) {
            if (!gone_v[at(v)]) unite(nv + e, v);
        }
    }
    for (int c = 0; c < nf; ++c) {
        if (c == removed) continue;
        for (int e : s.cell_edges[at(c)]) {
            if (!gone_e[at(e)]) unite(nv + ne + c, nv + e);
        }
        for (int v : d.cells[at(c)].walk) {
            if (!gone_v[at(v)]) unite(nv + ne + c, v);
        }
    }
    std::set<int> roots;
    for (int v = 0; v < nv; ++v) {
        if (!gone_v[at(v)]) roots.insert(find(v));
    }
    for (int e = 0; e < ne; ++e) {
        if (!gone_e[at(e)]) roots.insert(find(nv + e));
    }
    for (int c = 0; c < nf; ++c) {
        if (c != removed) roots.insert(find(nv + ne + c));
    }
    Removal r;
    r.components = static_cast<int>(roots.size());
    const int elements = nf + static_cast<int>(s.free_edges.size());
    for (int x = 0; x < elements; ++x) {
        if (x == removed) {
            r.element_component.push_back(-1);
        } else if (x < nf) {
            r.element_component.push_back(find(nv + ne + x));
        } else {
            r.element_component.push_back(find(nv + s.free_edges[at(x - nf)]));
        }
    }
    return r;
}

std::vector<int> element_vertices(const DiscDiagram& d, const CellStructure& s, int x) {
    const int nf = static_cast<int>(d.cells.size());
    std::vector<int> v;
    if (x < nf) {
        v = d.cells[at(x)].walk;
    } else {
        const auto e = s.edges[at(s.free_edges[at(x - nf)])];
        v = {e.first, e.second};
    }
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::optional<Ladder> ladder_decomposition(const DiscDiagram& d) {
    const CellStructure s = cell_structure(d);
    const int nf = static_cast<int>(d.cells.size());
    const int n = nf + static_cast<int>(s.free_edges.size());
    if (n == 0) return std::nullopt;
    auto element = [&](int x) {
        Ladder::Element el;
        if (x < nf) {
            el.cell = x;
        } else {
            el.edge = s.edges[at(s.free_edges[at(x - nf)])];
        }
        return el;
    };
    if (n == 1) {
        Ladder l;
        l.elements.push_back(element(0));
        return l;
    }
    std::vector<Removal> removal;
    std::vector<int> ends;
    std::vector<int> middles;
    for (int x = 0; x < n; ++x) {
        removal.push_back(remove_element(d, s, x));
        const int k = removal.back().components;
        if (k == 1) {
            ends.push_back(x);
        } else if (k == 2) {
            middles.push_back(x);
        } else {
            return std::nullopt;
        }
    }
    if (ends.size() != 2) return std::nullopt;
    const int first = ends[0];
    std::vector<std::pair<int, int>> keyed;  // (elements on first's side, element)
    for (int x : middles) {
        const auto& r = removal[at(x)];
        const int side = r.element_component[at(first)];
        int count = 0;
        for (int y = 0; y < n; ++y) {
            if (y != x && r.element_component[at(y)] == side) ++count;
        }
        keyed.emplace_back(count, x);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order{first};
    for (std::size_t k = 0; k < keyed.size(); ++k) {
        if (keyed[k].first != static_cast<int>(k) + 1) return std::nullopt;
        order.push_back(keyed[k].second);
    }
    order.push_back(ends[1]);
    Ladder l;
    for (std::size_t k = 0; k < order.size(); ++k) {
        l.elements.push_back(element(order[k]));
        if (k + 1 == order.size()) break;
        const auto a = element_vertices(d, s, order[k]);
        const auto b = element_vertices(d, s, order[k + 1]);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) return std::nullopt;
        l.rungs.push_back(std::move(common));
    }
    return l;
}

std::string_view to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::SingleCell: return "SingleCell";
        case ClassKind::Ladder: return "Ladder";
        case ClassKind::ThreeShellsOrSpurs: return "ThreeShellsOrSpurs";
    }
    return "?";
}

Classification classify(const DiscDiagram& d) {
    Classification out;
    const auto edges = d.edges();
    const bool single = (d.cells.empty() && edges.size() <= 1) ||
                        (d.cells.size() == 1 && edges.size() == d.cells[0].walk.size());
    if (single) {
        out.kind = ClassKind::SingleCell;
        return out;
    }
    if (auto l = ladder_decomposition(d)) {
        out.kind = ClassKind::Ladder;
        out.ladder = std::move(l);
        return out;
    }
    out.shells = find_shells(d);
    out.spurs = find_spurs(d);
    if (out.shells.size() + out.spurs.size() >= 3) {
        out.kind = ClassKind::ThreeShellsOrSpurs;
        return out;
    }
    throw Error(ErrorKind::Unclassifiable, "diagram of area " + std::to_string(d.area()) + " has " +
                                               std::to_string(out.shells.size()) + " shells and " +
                                               std::to_string(out.spurs.size()) + " spurs and is not a ladder");
}

json to_json(const Classification& c) {
    json j;
    j["kind"] = to_string(c.kind);
    if (c.ladder) {
        json el = json::array();
        for (const auto& e : c.ladder->elements) {
            if (e.cell >= 0) {
                el.push_back({{"cell", e.cell}});
            } else {
                el.push_back({{"edge", {e.edge.first, e.edge.second}}});
            }
        }
        j["elements"] = el;
        j["rungs"] = c.ladder->rungs;
    }
    if (c.kind == ClassKind::ThreeShellsOrSpurs) {
        json shells = json::array();
        for (const auto& s : c.shells) {
            shells.push_back({{"cell", s.cell}, {"outer_path", s.outer_path}, {"internal_arcs", s.internal_arcs}});
        }
        json spurs = json::array();
        for (const auto& s : c.spurs) spurs.push_back({{"leaf", s.leaf}, {"other", s.other}});
        j["shells"] = shells;
        j["spurs"] = spurs;
    }
    return j;
}

std::optional<DiscDiagram> shell_off(const DiscDiagram& d) {
    for (const auto& s : find_shells(d)) {
        const int n = static_cast<int>(d.cells[at(s.cell)].walk.size());
        const int outer = static_cast<int>(s.outer_path.size()) - 1;
        if (s.inner_path.empty() || 2 * outer <= n) continue;
        // The outer path runs along the boundary in the same direction.
        const auto& b = d.boundary;
        const std::size_t bn = b.size();
        std::size_t pos = bn;
        for (std::size_t i = 0; i < bn; ++i) {
            if (b[i] == s.outer_path[0] && b[(i + 1) % bn] == s.outer_path[1]) pos = i;
        }
        if (pos == bn) continue;
        std::vector<int> rotated;
        for (std::size_t k = 0; k < bn; ++k) rotated.push_back(b[(pos + k) % bn]);
        std::vector<int> boundary(s.inner_path.rbegin(), s.inner_path.rend());  // outer start .. outer end
        boundary.pop_back();
        for (std::size_t k = static_cast<std::size_t>(outer); k < rotated.size(); ++k) boundary.push_back(rotated[k]);
        DiscDiagram out;
        out.target = d.target;
        std::map<int, int> dense;
        auto id = [&](int v) {
            auto [it, fresh] = dense.emplace(v, static_cast<int>(out.labels.size()));
            if (fresh) out.labels.push_back(d.labels[at(v)]);
            return it->second;
        };
        for (int v : boundary) out.boundary.push_back(id(v));
        for (std::size_t c = 0; c < d.cells.size(); ++c) {
            if (static_cast<int>(c) == s.cell) continue;
            DiagramCell cell = d.cells[c];
            for (int& v : cell.walk) v = id(v);
            out.cells.push_back(std::move(cell));
        }
        return out;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

int DefectTable::total() const {
    int t = 0;
    for (const auto& p : parts) t += p.total;
    return t;
}

bool DefectTable::passed() const {
    return std::all_of(parts.begin(), parts.end(), [](const Part& p) { return p.total == 6; });
}

DefectTable gauss_bonnet_audit(const DiscDiagram& d) {
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
        if (d.cells[c].walk.size() != 3) {
            throw Error(ErrorKind::NotTriangulated, "cell " + std::to_string(c) + " has " +
                                                        std::to_string(d.cells[c].walk.size()) + " sides");
        }
    }
    const std::size_t n = d.cells.size();
    std::map<std::pair<int, int>, std::vector<int>> edge_cells;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& w = d.cells[c].walk;
        for (std::size_t i = 0; i < 3; ++i) edge_cells[std::minmax(w[i], w[(i + 1) % 3])].push_back(static_cast<int>(c));
    }
    std::vector<int> part(n, -1);
    DefectTable table;
    for (std::size_t s = 0; s < n; ++s) {
        if (part[s] >= 0) continue;
        const int id = static_cast<int>(table.parts.size());
        std::vector<int> members;
        std::deque<int> queue{static_cast<int>(s)};
        part[s] = id;
        while (!queue.empty()) {
            const int c = queue.front();
            queue.pop_front();
            members.push_back(c);
            const auto& w = d.cells[at(c)].walk;
            for (std::size_t i = 0; i < 3; ++i) {
                for (int o : edge_cells[std::minmax(w[i], w[(i + 1) % 3])]) {
                    if (part[at(o)] < 0) {
                        part[at(o)] = id;
                        queue.push_back(o);
                    }
                }
            }
        }
        std::map<int, int> triangles;
        std::map<std::pair<int, int>, int> edge_count;
        for (int c : members) {
            const auto& w = d.cells[at(c)].walk;
            for (std::size_t i = 0; i < 3; ++i) {
                ++triangles[w[i]];
                ++edge_count[std::minmax(w[i], w[(i + 1) % 3])];
            }
        }
        std::set<int> boundary;
        for (const auto& [e, k] : edge_count) {
            if (k == 1) {
                boundary.insert(e.first);
                boundary.insert(e.second);
            }
        }
        DefectTable::Part p;
        for (const auto& [v, t] : triangles) {
            const int defect = (boundary.count(v) ? 3 : 6) - t;
            p.defects.emplace_back(v, defect);
            p.total += defect;
        }
        table.parts.push_back(std::move(p));
    }
    return table;
}

json to_json(const DefectTable& t) {
    json parts = json::array();
    for (const auto& p : t.parts) {
        json defects = json::array();
        for (const auto& [v, x] : p.defects) defects.push_back({v, x});
        parts.push_back({{"total", p.total}, {"defects", defects}});
    }
    return {{"verdict", t.passed() ? "pass" : "fail"}, {"total", t.total()}, {"parts", parts}};
}

}  // namespace npc
