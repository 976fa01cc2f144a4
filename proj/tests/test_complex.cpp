#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "npc/complex.hpp"
#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/io.hpp"
#include "oracles.hpp"

using namespace npc;

namespace {

Complex triangle_graph(bool with_cell) {
    std::vector<Walk> cells;
    if (with_cell) cells.push_back({1, 2, 3});
    return Complex::make(ComplexKind::Simplicial, {1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}, cells);
}

}  // namespace

TEST_CASE("validate accepts generated fixtures") {
    for (int r = 0; r <= 4; ++r) CHECK(validate(gen_equilateral_disc(r)).passed());
    CHECK(validate(gen_tree(2, 4)).passed());
    CHECK(validate(gen_cycle_graph(4)).passed());
    CHECK(validate(gen_polygon(5)).passed());
    CHECK(validate(gen_flat_parallelogram(3, 2)).passed());
    CHECK(validate(gen_join_lines(3)).passed());
    CHECK(validate(gen_cayley_ball(surface_presentation(2), 1)).passed());
}

TEST_CASE("validate names the violation") {
    auto missing = Complex::make(ComplexKind::Simplicial, {1, 2, 3}, {{1, 2}, {2, 3}}, {{1, 2, 3}});
    auto r = validate(missing);
    CHECK_FALSE(r.passed());
    CHECK(r.witness.at("type") == "missing_edge");

    auto loop = Complex::make(ComplexKind::Simplicial, {1, 2}, {{1, 1}, {1, 2}}, {});
    CHECK(validate(loop).witness.at("type") == "loop_edge");

    auto unknown = Complex::make(ComplexKind::Simplicial, {1, 2}, {{1, 5}}, {});
    CHECK(validate(unknown).witness.at("type") == "unknown_edge_endpoint");

    auto bad = Complex::make(ComplexKind::Polygonal, {1, 2}, {{1, 2}}, {{1, 2}});
    CHECK(validate(bad).witness.at("type") == "bad_cell_length");
}

TEST_CASE("is_flag finds empty triangles") {
    auto r = is_flag(triangle_graph(false));
    CHECK_FALSE(r.passed());
    CHECK(r.witness.at("clique") == json::array({1, 2, 3}));
    CHECK(is_flag(triangle_graph(true)).passed());
    CHECK(is_flag(gen_cycle_graph(6)).passed());
    CHECK_THROWS_AS(is_flag(gen_polygon(5)), Error);
}

TEST_CASE("is_flag agrees with clique enumeration") {
    for (int r = 1; r <= 3; ++r) {
        const auto c = gen_equilateral_disc(r);
        const auto nb = oracle::neighbours(c);
        std::set<std::vector<VertexId>> cells(c.cell_walks().begin(), c.cell_walks().end());
        bool every_clique_filled = true;
        for (VertexId a : c.vertex_ids())
            for (VertexId b : nb.at(a))
                for (VertexId d : nb.at(b))
                    if (a < b && b < d && nb.at(a).count(d)) every_clique_filled &= cells.count({a, b, d}) > 0;
        CHECK(every_clique_filled == is_flag(c).passed());
    }
}

TEST_CASE("canonical cycles are rotation and reflection invariant") {
    const std::vector<VertexId> w{3, 1, 4, 5};
    const auto c = canonical_cycle<VertexId>(w);
    CHECK(c == std::vector<VertexId>{1, 3, 5, 4});
    const std::vector<VertexId> rev{5, 4, 1, 3};
    CHECK(canonical_cycle<VertexId>(rev) == c);
}

TEST_CASE("subcomplex closure and connectivity") {
    const auto c = gen_equilateral_disc(1);
    const std::vector<VertexId> verts{1, 4};
    auto k = Subcomplex::from_parts(c, verts);
    CHECK_FALSE(k.connected());
    auto s = star(c, 0);
    CHECK(s.connected());
    CHECK(s.cells().size() == 6);
    CHECK(s.contains(k));
}

TEST_CASE("serialization round-trips and rejects other versions") {
    const auto dir = std::filesystem::temp_directory_path() / "npc_test_complex";
    std::filesystem::create_directories(dir);
    const auto c = gen_equilateral_disc(2);
    save(dir / "d2.json", c);
    CHECK(load_complex(dir / "d2.json") == c);

    const auto p = surface_presentation(2);
    save(dir / "s2.json", p);
    CHECK(load_presentation(dir / "s2.json") == p);

    json j = to_json(c);
    j["format"] = "npc-complex-v9";
    try {
        complex_from_json(j);
        FAIL("expected SchemaVersionError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SchemaVersionError);
    }
    json broken = to_json(c);
    broken.erase("edges");
    try {
        complex_from_json(broken);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.message()).find("edges") != std::string::npos);
    }
}

TEST_CASE("generators are deterministic") {
    CHECK(to_json(gen_equilateral_disc(3)).dump() == to_json(gen_equilateral_disc(3)).dump());
    CHECK(to_json(gen_cayley_ball(surface_presentation(2), 2)).dump() ==
          to_json(gen_cayley_ball(surface_presentation(2), 2)).dump());
}

TEST_CASE("cayley ball sizes") {
    const auto c = gen_cayley_ball(surface_presentation(2), 1);
    CHECK(c.vertex_count() == 49);
    CHECK(c.cell_count() == 8);
    CHECK(c.kind() == ComplexKind::Polygonal);
}
