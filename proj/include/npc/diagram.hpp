#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "npc/complex.hpp"
#include "npc/report.hpp"

namespace npc {

// A polygon of a disc diagram: its walk over diagram vertices (counter-clockwise,
// i.e. with the polygon on the left) and how it maps onto a target cell.
// Mapping rule: label(walk[i]) = target_walk[(offset + s*i) mod m], s = reflected ? -1 : 1,
// where target_walk is the canonical walk of the target cell.
struct DiagramCell {
    std::vector<int> walk;
    int target_cell = 0;
    int offset = 0;
    bool reflected = false;

    bool operator==(const DiagramCell&) const = default;
};

// Planar contractible polygonal complex with a cellular map to a target.
// Vertices are 0..labels.size()-1; labels[v] is the target vertex id.
// `boundary` is the cyclic outer boundary walk with the disc on its left; it
// passes every boundary edge once per side that faces the outside (spurs and
// bridges twice). A one-vertex diagram has boundary {v}.
struct DiscDiagram {
    std::vector<VertexId> labels;
    std::vector<DiagramCell> cells;
    std::vector<int> boundary;
    std::string target;  // reference to the target file, informational

    std::size_t vertex_count() const { return labels.size(); }
    int area() const { return static_cast<int>(cells.size()); }
    // Undirected edges (a < b), sorted, from cells and boundary.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const DiscDiagram&) const = default;
};

// Finds the target cell whose boundary is the given label cycle, with the offset
// and orientation that realise it. nullopt if there is none.
struct CellMatch {
    int cell = 0;
    int offset = 0;
    bool reflected = false;
};
std::optional<CellMatch> match_cell(const Complex& target, std::span<const VertexId> labels);

// Assembles diagrams from labelled vertices and cells. Vertices can be merged
// (union-find); build() orients all cells consistently with the given outer
// boundary and renumbers vertices densely.
class DiagramBuilder {
public:
    explicit DiagramBuilder(const Complex& target) : target_(&target) {}

    int add_vertex(VertexId label);
    // Throws FillFailed if the labels do not spell a target cell.
    void add_cell(const std::vector<int>& walk);
    void merge(int a, int b);
    int find(int v) const;
    VertexId label(int v) const { return labels_[static_cast<std::size_t>(find(v))]; }
    std::size_t cell_count() const { return cells_.size(); }
    const Complex& target() const { return *target_; }

    DiscDiagram build(const std::vector<int>& boundary) const;

private:
    const Complex* target_;
    std::vector<VertexId> labels_;
    mutable std::vector<int> parent_;
    std::vector<std::vector<int>> cells_;
};

// Full check: planar map, contractibility, cell maps against the target.
CheckReport validate_diagram(const DiscDiagram& d, const Complex& target);
// Only the planar-map part of validation (no target needed).
CheckReport validate_planar(const DiscDiagram& d);

int area(const DiscDiagram& d);
int multiplicity(const DiscDiagram& d);
int max_degree(const DiscDiagram& d);
std::vector<int> degrees(const DiscDiagram& d);
bool is_singular(const DiscDiagram& d);

CheckReport is_reduced(const DiscDiagram& d);
CheckReport verify_tight(const DiscDiagram& d, int n);

// --- structure -----------------------------------------------------------

struct Spur {
    int leaf = 0;   // vertex of valence 1
    int other = 0;  // its neighbour
};

struct Shell {
    int cell = 0;
    std::vector<int> outer_path;  // vertices along the outer path
    std::vector<int> inner_path;  // vertices along the inner path
    int internal_arcs = 0;
};

struct Ladder {
    // Elements in chain order: a cell index (>= 0) or a free edge (-1 with `edge`).
    struct Element {
        int cell = -1;
        std::pair<int, int> edge{-1, -1};
    };
    std::vector<Element> elements;
    std::vector<std::vector<int>> rungs;  // shared vertices of consecutive elements
};

std::vector<Spur> find_spurs(const DiscDiagram& d);
std::vector<Shell> find_shells(const DiscDiagram& d);
std::optional<Ladder> ladder_decomposition(const DiscDiagram& d);

enum class ClassKind { SingleCell, Ladder, ThreeShellsOrSpurs };
std::string_view to_string(ClassKind kind);

struct Classification {
    ClassKind kind = ClassKind::SingleCell;
    std::optional<Ladder> ladder;
    std::vector<Shell> shells;
    std::vector<Spur> spurs;
};

// Throws Unclassifiable when none of the three cases applies.
Classification classify(const DiscDiagram& d);
json to_json(const Classification& c);

// Removes a shell whose outer path is longer than half its boundary, if any.
std::optional<DiscDiagram> shell_off(const DiscDiagram& d);

// --- curvature -----------------------------------------------------------

// Defects per vertex, computed separately on every maximal edge-connected set of
// triangles (for a non-singular disc that is the whole diagram).
struct DefectTable {
    struct Part {
        std::vector<std::pair<int, int>> defects;  // (vertex, defect)
        int total = 0;
    };
    std::vector<Part> parts;

    int total() const;
    bool passed() const;
};

// Throws NotTriangulated if some cell is not a triangle.
DefectTable gauss_bonnet_audit(const DiscDiagram& d);
json to_json(const DefectTable& t);

// --- search --------------------------------------------------------------

// Exhaustive minimal-area van Kampen search. Keeps a memo across calls, so one
// searcher should be reused for many loops over the same target.
class DiagramSearcher {
public:
    explicit DiagramSearcher(const Complex& target);
    ~DiagramSearcher();
    DiagramSearcher(const DiagramSearcher&) = delete;
    DiagramSearcher& operator=(const DiagramSearcher&) = delete;

    // Minimal area of a filling with area <= cap, or nullopt.
    std::optional<int> min_area(const std::vector<VertexId>& loop, int cap);
    // Throws NotFillable(cap).
    DiscDiagram search(const std::vector<VertexId>& loop, int cap);
    // Fills a loop of builder vertices (closed walk, last != first) into `b`.
    void fill_into(DiagramBuilder& b, const std::vector<int>& loop, int cap);

    std::size_t memo_size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// loop: closed walk of target ids, either with or without a repeated last vertex.
DiscDiagram reduced_diagram_search(const Complex& target, const std::vector<VertexId>& loop, int area_cap);

}  // namespace npc
