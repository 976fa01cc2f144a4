#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "npc/report.hpp"

namespace npc {

// Public vertex identifiers are arbitrary non-negative integers. Internally every
// complex also numbers its vertices densely (0..n-1) in increasing id order, so
// "index" below always means that dense position.
using VertexId = std::int64_t;
using Walk = std::vector<VertexId>;

enum class ComplexKind { Simplicial, Polygonal };

std::string_view to_string(ComplexKind kind);

// Least rotation of the cyclic walk or of its reversal.
template <class T>
std::vector<T> canonical_cycle(std::span<const T> walk);

// Finite 2-complex with a simplicial 1-skeleton. Simplicial complexes carry
// triangles, polygonal complexes carry embedded boundary cycles of length >= 3.
//
// Construction never rejects data: malformed input (loops, missing edges,
// unknown vertices) is kept so that validate() can name the violation. Graph
// queries silently ignore the malformed parts.
class Complex {
public:
    Complex() = default;

    static Complex make(ComplexKind kind, std::vector<VertexId> vertices,
                        std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<Walk> cells);

    ComplexKind kind() const { return kind_; }
    bool simplicial() const { return kind_ == ComplexKind::Simplicial; }

    // Raw, normalised data (sorted; cells in canonical form).
    const std::vector<VertexId>& vertex_ids() const { return vertices_; }
    const std::vector<std::pair<VertexId, VertexId>>& raw_edges() const { return raw_edges_; }
    const std::vector<Walk>& cell_walks() const { return cells_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t cell_count() const { return cells_.size(); }

    bool has_vertex(VertexId id) const;
    // Throws Error(UnknownVertex).
    int index_of(VertexId id) const;
    VertexId id_of(int index) const { return vertices_[static_cast<std::size_t>(index)]; }

    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool adjacent(int a, int b) const { return edge_index(a, b) >= 0; }
    // Index into edges() of the edge {a,b}, or -1.
    int edge_index(int a, int b) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Cell boundary as vertex indices; empty if the cell references unknown vertices.
    const std::vector<int>& cell(int c) const { return cell_index_walks_[static_cast<std::size_t>(c)]; }
    const std::vector<int>& cells_of_edge(int e) const { return edge_cells_[static_cast<std::size_t>(e)]; }
    const std::vector<int>& cells_of_vertex(int v) const { return vertex_cells_[static_cast<std::size_t>(v)]; }

    bool operator==(const Complex& other) const;

private:
    void build_index();

    ComplexKind kind_ = ComplexKind::Simplicial;
    std::vector<VertexId> vertices_;
    std::vector<std::pair<VertexId, VertexId>> raw_edges_;
    std::vector<Walk> cells_;

    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> edge_lookup_;  // per vertex, edge index parallel to adjacency_
    std::vector<std::vector<int>> cell_index_walks_;
    std::vector<std::vector<int>> edge_cells_;
    std::vector<std::vector<int>> vertex_cells_;
};

// Face-closed membership flags over a parent complex. The parent must outlive it.
class Subcomplex {
public:
    explicit Subcomplex(const Complex& parent);

    // Closure of the given vertices, edges and cells (ids / cell indices).
    static Subcomplex from_parts(const Complex& parent, std::span<const VertexId> vertices,
                                 std::span<const std::pair<VertexId, VertexId>> edges = {},
                                 std::span<const int> cells = {});

    const Complex& parent() const { return *parent_; }

    bool has_vertex(int v) const { return vertex_[static_cast<std::size_t>(v)] != 0; }
    bool has_edge(int e) const { return edge_[static_cast<std::size_t>(e)] != 0; }
    bool has_cell(int c) const { return cell_[static_cast<std::size_t>(c)] != 0; }

    void add_vertex(int v);
    void add_edge(int e);  // with endpoints
    void add_cell(int c);  // with boundary edges and vertices

    std::vector<int> vertices() const;
    std::vector<int> edges() const;
    std::vector<int> cells() const;
    std::size_t edge_count() const;
    bool empty() const;

    // Vertex set connected through the subcomplex's own edges.
    bool connected() const;
    bool contains(const Subcomplex& other) const;
    bool operator==(const Subcomplex& other) const;

    json to_json() const;

private:
    const Complex* parent_;
    std::vector<char> vertex_;
    std::vector<char> edge_;
    std::vector<char> cell_;
};

CheckReport validate(const Complex& complex);
// Throws KindMismatch on polygonal input.
CheckReport is_flag(const Complex& complex);

Subcomplex star(const Complex& complex, VertexId v);
Subcomplex neighborhood(const Complex& complex, const Subcomplex& k);

// Generators are single lowercase letters; the uppercase letter is the inverse.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::string> relators;

    // Throws ParseError when a relator is empty, uses unknown letters, or is not
    // freely and cyclically reduced.
    static Presentation make(std::vector<std::string> generators, std::vector<std::string> relators);

    bool operator==(const Presentation&) const = default;
};

}  // namespace npc
