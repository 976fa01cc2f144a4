#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npc/diagram.hpp"
#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/io.hpp"
#include "npc/metric.hpp"

using namespace npc;

namespace {

// Euler characteristic and degree sum, computed from scratch.
int euler(const DiscDiagram& d) {
    return static_cast<int>(d.vertex_count()) - static_cast<int>(d.edges().size()) + d.area();
}

int defect_total_by_hand(const DiscDiagram& d) {
    std::vector<int> tri(d.vertex_count(), 0);
    for (const auto& c : d.cells)
        for (int v : c.walk) ++tri[static_cast<std::size_t>(v)];
    std::vector<char> on_boundary(d.vertex_count(), 0);
    for (int v : d.boundary) on_boundary[static_cast<std::size_t>(v)] = 1;
    int total = 0;
    for (std::size_t v = 0; v < d.vertex_count(); ++v) total += on_boundary[v] ? 3 - tri[v] : 6 - tri[v];
    return total;
}

}  // namespace

TEST_CASE("single cell diagram") {
    const auto c = gen_polygon(5);
    const auto d = reduced_diagram_search(c, {0, 1, 2, 3, 4}, 4);
    CHECK(d.area() == 1);
    CHECK(validate_diagram(d, c).passed());
    CHECK(classify(d).kind == ClassKind::SingleCell);
}

TEST_CASE("validation rejects broken diagrams") {
    const auto c = gen_equilateral_disc(1);
    auto d = reduced_diagram_search(c, {1, 2, 3, 4, 5, 6}, 8);
    CHECK(validate_diagram(d, c).passed());
    auto broken = d;
    broken.cells.pop_back();
    CHECK_FALSE(validate_planar(broken).passed());
    auto relabelled = d;
    relabelled.labels[0] = 999;
    CHECK_FALSE(validate_diagram(relabelled, c).passed());
}

TEST_CASE("search finds minimal areas") {
    const auto c = gen_equilateral_disc(3);
    DiagramSearcher s(c);
    CHECK(s.min_area({1, 2, 3, 4, 5, 6}, 10) == 6);
    CHECK(s.min_area({0, 1, 2}, 10) == 1);
    CHECK_FALSE(s.min_area({1, 2, 3, 4, 5, 6}, 5).has_value());
    try {
        s.search({1, 2, 3, 4, 5, 6}, 5);
        FAIL("expected NotFillable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFillable);
    }
    const auto par = gen_flat_parallelogram(2, 2);
    const auto d = reduced_diagram_search(par, {0, 1, 2, 5, 8, 7, 6, 3}, 16);
    CHECK(d.area() == 8);
    CHECK(is_reduced(d).passed());
    CHECK(gauss_bonnet_audit(d).total() == 6);
}

TEST_CASE("degenerate loops") {
    const auto c = gen_equilateral_disc(1);
    const auto spur = reduced_diagram_search(c, {0, 1}, 4);
    CHECK(spur.area() == 0);
    CHECK(find_spurs(spur).size() == 1);
    CHECK(classify(spur).kind == ClassKind::SingleCell);
    // Two edges meeting at a vertex: two spurs, and a ladder of two free edges.
    const auto path = reduced_diagram_search(c, {1, 0, 4, 0}, 4);
    CHECK(path.area() == 0);
    CHECK(find_spurs(path).size() == 2);
    CHECK(classify(path).kind == ClassKind::Ladder);
    CHECK_THROWS_AS(reduced_diagram_search(c, {0, 9}, 4), Error);
}

TEST_CASE("ladders classify as ladders") {
    LadderSpec spec;
    spec.lengths = {6, 6, 6};
    spec.gluings = {{0, 1, 1}, {1, 2, 1}};
    const auto g = gen_ladder_diagram(spec);
    CHECK(validate_diagram(g.diagram, g.target).passed());
    const auto cl = classify(g.diagram);
    CHECK(cl.kind == ClassKind::Ladder);
    REQUIRE(cl.ladder.has_value());
    CHECK(cl.ladder->elements.size() == 3);

    LadderSpec with_edge;
    with_edge.lengths = {5, 1, 5};
    with_edge.gluings = {{0, 1, 0}, {1, 2, 0}};
    const auto e = gen_ladder_diagram(with_edge);
    CHECK(validate_planar(e.diagram).passed());
    CHECK(classify(e.diagram).kind == ClassKind::Ladder);

    LadderSpec bad;
    bad.lengths = {6, 6, 6};
    bad.gluings = {{0, 2, 1}};
    CHECK_THROWS_AS(gen_ladder_diagram(bad), Error);
}

TEST_CASE("random triangulated discs satisfy Gauss-Bonnet") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto g = gen_random_triangulated_disc(30, seed);
        REQUIRE(validate_diagram(g.diagram, g.target).passed());
        CHECK(euler(g.diagram) == 1);
        const auto t = gauss_bonnet_audit(g.diagram);
        CHECK(t.total() == 6);
        if (!is_singular(g.diagram)) CHECK(defect_total_by_hand(g.diagram) == 6);
    }
}

TEST_CASE("gauss-bonnet needs triangles") {
    const auto c = gen_polygon(4);
    const auto d = reduced_diagram_search(c, {0, 1, 2, 3}, 2);
    CHECK_THROWS_AS(gauss_bonnet_audit(d), Error);
}

TEST_CASE("diagram serialization round-trips") {
    const auto g = gen_random_triangulated_disc(12, 3);
    const auto j = to_json(g.diagram);
    CHECK(diagram_from_json(j) == g.diagram);
    CHECK(to_json(diagram_from_json(j)).dump() == j.dump());
}

TEST_CASE("shell removal shortens the boundary") {
    const auto c = gen_cayley_ball(surface_presentation(2), 2);
    // Two octagons glued along an edge: each is a shell with a 7-edge outer path.
    LadderSpec spec;
    spec.lengths = {8, 8};
    spec.gluings = {{0, 1, 1}};
    const auto g = gen_ladder_diagram(spec);
    const auto shells = find_shells(g.diagram);
    CHECK(shells.size() == 2);
    const auto smaller = shell_off(g.diagram);
    REQUIRE(smaller.has_value());
    CHECK(smaller->area() == 1);
    CHECK(c.cell_count() > 0);
}
