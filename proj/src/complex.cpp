#include "npc/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "npc/error.hpp"
#include "npc/words.hpp"

namespace npc {

std::string_view to_string(ComplexKind kind) {
    return kind == ComplexKind::Simplicial ? "simplicial" : "polygonal";
}

template <class T>
std::vector<T> canonical_cycle(std::span<const T> walk) {
    const std::size_t n = walk.size();
    if (n == 0) return {};
    std::vector<T> best(walk.begin(), walk.end());
    std::vector<T> candidate(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                candidate[i] = dir == 0 ? walk[(s + i) % n] : walk[(s + n - i) % n];
            }
            if (candidate < best) best = candidate;
        }
    }
    return best;
}

template std::vector<VertexId> canonical_cycle<VertexId>(std::span<const VertexId>);
template std::vector<int> canonical_cycle<int>(std::span<const int>);

Complex Complex::make(ComplexKind kind, std::vector<VertexId> vertices,
                      std::vector<std::pair<VertexId, VertexId>> edges, std::vector<Walk> cells) {
    Complex c;
    c.kind_ = kind;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    c.vertices_ = std::move(vertices);
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    c.raw_edges_ = std::move(edges);
    for (auto& w : cells) {
        w = canonical_cycle<VertexId>(w);
    }
    std::sort(cells.begin(), cells.end());
    c.cells_ = std::move(cells);
    c.build_index();
    return c;
}

void Complex::build_index() {
    const std::size_t n = vertices_.size();
    adjacency_.assign(n, {});
    edge_lookup_.assign(n, {});
    edges_.clear();
    for (const auto& [a, b] : raw_edges_) {
        if (a == b || !has_vertex(a) || !has_vertex(b)) continue;
        const int ia = index_of(a);
        const int ib = index_of(b);
        if (!edges_.empty() && edges_.back() == std::make_pair(ia, ib)) continue;  // parallel copy
        edges_.emplace_back(ia, ib);
    }
    // Edges are sorted by (ia, ib) because ids are sorted and indices follow ids.
    std::vector<std::vector<std::pair<int, int>>> tmp(n);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto [a, b] = edges_[e];
        tmp[static_cast<std::size_t>(a)].emplace_back(b, static_cast<int>(e));
        tmp[static_cast<std::size_t>(b)].emplace_back(a, static_cast<int>(e));
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(tmp[v].begin(), tmp[v].end());
        for (const auto& [w, e] : tmp[v]) {
            adjacency_[v].push_back(w);
            edge_lookup_[v].push_back(e);
        }
    }
    cell_index_walks_.assign(cells_.size(), {});
    edge_cells_.assign(edges_.size(), {});
    vertex_cells_.assign(n, {});
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        std::vector<int> walk;
        bool ok = true;
        for (VertexId id : cells_[c]) {
            if (!has_vertex(id)) {
                ok = false;
                break;
            }
            walk.push_back(index_of(id));
        }
        if (!ok) continue;
        std::set<int> seen_edges;
        std::set<int> seen_vertices;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const int a = walk[i];
            const int b = walk[(i + 1) % walk.size()];
            const int e = edge_index(a, b);
            if (e >= 0 && seen_edges.insert(e).second) edge_cells_[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
            if (seen_vertices.insert(a).second) vertex_cells_[static_cast<std::size_t>(a)].push_back(static_cast<int>(c));
        }
        cell_index_walks_[c] = std::move(walk);
    }
}

bool Complex::has_vertex(VertexId id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

int Complex::index_of(VertexId id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) {
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(id) + " is not in the complex");
    }
    return static_cast<int>(it - vertices_.begin());
}

int Complex::edge_index(int a, int b) const {
    if (a < 0 || b < 0) return -1;
    const auto& adj = adjacency_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(adj.begin(), adj.end(), b);
    if (it == adj.end() || *it != b) return -1;
    return edge_lookup_[static_cast<std::size_t>(a)][static_cast<std::size_t>(it - adj.begin())];
}

bool Complex::operator==(const Complex& other) const {
    return kind_ == other.kind_ && vertices_ == other.vertices_ && raw_edges_ == other.raw_edges_ &&
           cells_ == other.cells_;
}

// ---------------------------------------------------------------------------

Subcomplex::Subcomplex(const Complex& parent)
    : parent_(&parent),
      vertex_(parent.vertex_count(), 0),
      edge_(parent.edge_count(), 0),
      cell_(parent.cell_count(), 0) {}

Subcomplex Subcomplex::from_parts(const Complex& parent, std::span<const VertexId> vertices,
                                  std::span<const std::pair<VertexId, VertexId>> edges,
                                  std::span<const int> cells) {
    Subcomplex k(parent);
    for (VertexId v : vertices) k.add_vertex(parent.index_of(v));
    for (const auto& [a, b] : edges) {
        const int e = parent.edge_index(parent.index_of(a), parent.index_of(b));
        if (e < 0) {
            throw Error(ErrorKind::InvalidArgument,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not in the complex");
        }
        k.add_edge(e);
    }
    for (int c : cells) {
        if (c < 0 || static_cast<std::size_t>(c) >= parent.cell_count()) {
            throw Error(ErrorKind::InvalidArgument, "cell " + std::to_string(c) + " is not in the complex");
        }
        k.add_cell(c);
    }
    return k;
}

void Subcomplex::add_vertex(int v) { vertex_[static_cast<std::size_t>(v)] = 1; }

void Subcomplex::add_edge(int e) {
    edge_[static_cast<std::size_t>(e)] = 1;
    const auto [a, b] = parent_->edges()[static_cast<std::size_t>(e)];
    add_vertex(a);
    add_vertex(b);
}

void Subcomplex::add_cell(int c) {
    cell_[static_cast<std::size_t>(c)] = 1;
    const auto& walk = parent_->cell(c);
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const int e = parent_->edge_index(walk[i], walk[(i + 1) % walk.size()]);
        if (e >= 0) add_edge(e);
        add_vertex(walk[i]);
    }
}

namespace {
std::vector<int> flagged(const std::vector<char>& flags) {
    std::vector<int> out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}
}  // namespace

std::vector<int> Subcomplex::vertices() const { return flagged(vertex_); }
std::vector<int> Subcomplex::edges() const { return flagged(edge_); }
std::vector<int> Subcomplex::cells() const { return flagged(cell_); }

std::size_t Subcomplex::edge_count() const {
    return static_cast<std::size_t>(std::count(edge_.begin(), edge_.end(), 1));
}

bool Subcomplex::empty() const { return std::find(vertex_.begin(), vertex_.end(), 1) == vertex_.end(); }

bool Subcomplex::connected() const {
    const auto vs = vertices();
    if (vs.empty()) return true;
    std::vector<char> seen(vertex_.size(), 0);
    std::deque<int> queue{vs.front()};
    seen[static_cast<std::size_t>(vs.front())] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const auto& adj = parent_->neighbors(v);
        for (int w : adj) {
            const int e = parent_->edge_index(v, w);
            if (!has_edge(e) || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            queue.push_back(w);
        }
    }
    return reached == vs.size();
}

bool Subcomplex::contains(const Subcomplex& other) const {
    for (std::size_t i = 0; i < vertex_.size(); ++i) {
        if (other.vertex_[i] && !vertex_[i]) return false;
    }
    for (std::size_t i = 0; i < edge_.size(); ++i) {
        if (other.edge_[i] && !edge_[i]) return false;
    }
    for (std::size_t i = 0; i < cell_.size(); ++i) {
        if (other.cell_[i] && !cell_[i]) return false;
    }
    return true;
}

bool Subcomplex::operator==(const Subcomplex& other) const {
    return parent_ == other.parent_ && vertex_ == other.vertex_ && edge_ == other.edge_ && cell_ == other.cell_;
}

json Subcomplex::to_json() const {
    json j;
    json vs = json::array();
    for (int v : vertices()) vs.push_back(parent_->id_of(v));
    json es = json::array();
    for (int e : edges()) {
        const auto [a, b] = parent_->edges()[static_cast<std::size_t>(e)];
        es.push_back({parent_->id_of(a), parent_->id_of(b)});
    }
    j["vertices"] = vs;
    j["edges"] = es;
    j["cells"] = cells();
    return j;
}

// ---------------------------------------------------------------------------

CheckReport validate(const Complex& complex) {
    const std::string name = "validate";
    json stats = {{"vertices", complex.vertex_count()},
                  {"edges", complex.raw_edges().size()},
                  {"cells", complex.cell_count()}};
    if (complex.vertex_ids().empty()) {
        return CheckReport::fail(name, {{"type", "empty_complex"}}, stats);
    }
    for (VertexId id : complex.vertex_ids()) {
        if (id < 0) return CheckReport::fail(name, {{"type", "negative_vertex_id"}, {"vertex", id}}, stats);
    }
    const auto& edges = complex.raw_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        if (a == b) return CheckReport::fail(name, {{"type", "loop_edge"}, {"edge", {a, b}}}, stats);
        if (i > 0 && edges[i - 1] == edges[i]) {
            return CheckReport::fail(name, {{"type", "parallel_edge"}, {"edge", {a, b}}}, stats);
        }
        for (VertexId v : {a, b}) {
            if (!complex.has_vertex(v)) {
                return CheckReport::fail(name, {{"type", "unknown_edge_endpoint"}, {"edge", {a, b}}, {"vertex", v}},
                                         stats);
            }
        }
    }
    const auto& cells = complex.cell_walks();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Walk& walk = cells[c];
        const int ci = static_cast<int>(c);
        if (complex.simplicial() ? walk.size() != 3 : walk.size() < 3) {
            return CheckReport::fail(name, {{"type", "bad_cell_length"}, {"cell", ci}, {"walk", walk}}, stats);
        }
        for (VertexId v : walk) {
            if (!complex.has_vertex(v)) {
                return CheckReport::fail(name, {{"type", "unknown_cell_vertex"}, {"cell", ci}, {"vertex", v}}, stats);
            }
        }
        Walk sorted = walk;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return CheckReport::fail(name, {{"type", "non_embedded_cell"}, {"cell", ci}, {"walk", walk}}, stats);
        }
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const VertexId a = walk[i];
            const VertexId b = walk[(i + 1) % walk.size()];
            if (!complex.adjacent(complex.index_of(a), complex.index_of(b))) {
                return CheckReport::fail(name, {{"type", "missing_edge"}, {"cell", ci}, {"edge", {a, b}}}, stats);
            }
        }
        if (complex.simplicial() && c > 0 && cells[c - 1] == walk) {
            return CheckReport::fail(name, {{"type", "duplicate_triangle"}, {"cell", ci}, {"walk", walk}}, stats);
        }
    }
    return CheckReport::pass(name, stats);
}

CheckReport is_flag(const Complex& complex) {
    if (!complex.simplicial()) {
        throw Error(ErrorKind::KindMismatch, "is_flag needs a simplicial complex");
    }
    std::set<std::tuple<int, int, int>> triangles;
    for (std::size_t c = 0; c < complex.cell_count(); ++c) {
        auto w = complex.cell(static_cast<int>(c));
        if (w.size() != 3) continue;
        std::sort(w.begin(), w.end());
        triangles.emplace(w[0], w[1], w[2]);
    }
    std::size_t cliques = 0;
    const int n = static_cast<int>(complex.vertex_count());
    for (int a = 0; a < n; ++a) {
        for (int b : complex.neighbors(a)) {
            if (b <= a) continue;
            for (int c : complex.neighbors(b)) {
                if (c <= b || !complex.adjacent(a, c)) continue;
                ++cliques;
                if (!triangles.count({a, b, c})) {
                    return CheckReport::fail(
                        "is_flag",
                        {{"type", "empty_clique"},
                         {"clique", {complex.id_of(a), complex.id_of(b), complex.id_of(c)}}},
                        {{"cliques_checked", cliques}});
                }
            }
        }
    }
    return CheckReport::pass("is_flag", {{"cliques", cliques}});
}

Subcomplex star(const Complex& complex, VertexId v) {
    const int vi = complex.index_of(v);
    Subcomplex k(complex);
    k.add_vertex(vi);
    for (int w : complex.neighbors(vi)) k.add_edge(complex.edge_index(vi, w));
    for (int c : complex.cells_of_vertex(vi)) k.add_cell(c);
    return k;
}

Subcomplex neighborhood(const Complex& complex, const Subcomplex& k) {
    Subcomplex out = k;
    for (int v : k.vertices()) {
        for (int w : complex.neighbors(v)) out.add_edge(complex.edge_index(v, w));
        for (int c : complex.cells_of_vertex(v)) out.add_cell(c);
    }
    return out;
}

// ---------------------------------------------------------------------------

Presentation Presentation::make(std::vector<std::string> generators, std::vector<std::string> relators) {
    std::set<char> letters;
    for (const auto& g : generators) {
        if (g.size() != 1 || g[0] < 'a' || g[0] > 'z') {
            throw Error(ErrorKind::ParseError, "generator '" + g + "' must be a single lowercase letter");
        }
        if (!letters.insert(g[0]).second) {
            throw Error(ErrorKind::ParseError, "duplicate generator '" + g + "'");
        }
    }
    for (std::size_t i = 0; i < relators.size(); ++i) {
        const auto& r = relators[i];
        const std::string where = "relator " + std::to_string(i) + " '" + r + "'";
        if (r.empty()) throw Error(ErrorKind::ParseError, where + " is empty");
        for (char c : r) {
            if (!letters.count(words::generator_of(c))) {
                throw Error(ErrorKind::ParseError, where + " uses unknown letter '" + std::string(1, c) + "'");
            }
        }
        if (!words::is_freely_reduced(r)) throw Error(ErrorKind::ParseError, where + " is not freely reduced");
        if (!words::is_cyclically_reduced(r)) throw Error(ErrorKind::ParseError, where + " is not cyclically reduced");
    }
    return Presentation{std::move(generators), std::move(relators)};
}

}  // namespace npc
