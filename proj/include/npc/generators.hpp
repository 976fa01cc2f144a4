#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "npc/complex.hpp"
#include "npc/diagram.hpp"

namespace npc {

// Axial coordinates of the equilateral triangulation: neighbours differ by
// (+-1,0), (0,+-1), (1,-1), (-1,1); the hex distance is max(|i|,|j|,|i+j|).
struct Axial {
    int i = 0;
    int j = 0;
    bool operator==(const Axial&) const = default;
};
int hex_distance(Axial a, Axial b);

// Ball of radius r around the origin; vertex ids run ring by ring
// (centre 0, then each ring counter-clockwise from (k,0)).
Complex gen_equilateral_disc(int r);
std::vector<Axial> equilateral_disc_coordinates(int r);

Complex gen_tree(int branching, int depth);
Complex gen_polygon(int k);
// k-cycle graph without cells (for k = 4 the smallest flag non-systolic example).
Complex gen_cycle_graph(int k);
// Vertex (i,j), 0<=i<=p, 0<=j<=q, has id i*(q+1)+j; the diagonal runs (i+1,j)-(i,j+1).
Complex gen_flat_parallelogram(int p, int q);
// Lines a_{-r..r} (ids 0..2r) and b_{-r..r} (ids 2r+1..4r+1), all cross edges.
Complex gen_join_lines(int r);

// Cayley complex of a C'(1/6) presentation, restricted to the cell-radius-r ball:
// B_0 = {1}, B_{k+1} = B_k plus every generator edge and relator cell meeting B_k.
// Polygons are all relator cycles inside the final ball.
Complex gen_cayley_ball(const Presentation& p, int r);
Presentation surface_presentation(int genus);

struct LadderSpec {
    std::vector<int> lengths;  // polygon boundary length (>= 3) or 1 for a free edge
    struct Gluing {
        int a = 0;
        int b = 0;
        int rung = 0;  // shared edges; 0 glues at a single vertex
    };
    std::vector<Gluing> gluings;
};

// The ladder is its own target: vertex ids are diagram vertex numbers.
struct GeneratedDiagram {
    Complex target;
    DiscDiagram diagram;
};

// Throws InvalidSpec for gluings that are not between consecutive elements,
// missing gluings, or rungs that leave no room for rails.
GeneratedDiagram gen_ladder_diagram(const LadderSpec& spec);

// Random triangulated disc grown by ear attachments, corner fills, stellar
// subdivisions and edge flips. Deterministic in (steps, seed).
GeneratedDiagram gen_random_triangulated_disc(int steps, std::uint64_t seed);

}  // namespace npc
