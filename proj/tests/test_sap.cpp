#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>

#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/metric.hpp"
#include "npc/sap.hpp"
#include "oracles.hpp"

using namespace npc;


TEST_CASE("exit edges") {
    const auto c = gen_equilateral_disc(2);
    const std::vector<VertexId> kv{0};
    const auto k = Subcomplex::from_parts(c, kv);
    const auto x = exit_edge(k, {0, 1, 7});
    CHECK(x.edge == Edge{0, 1});
    CHECK(x.index == 0);
    try {
        exit_edge(k, {1, 7});
        FAIL("expected DoesNotGoThrough");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DoesNotGoThrough);
    }
    try {
        exit_edge(k, {7, 1, 0});
        FAIL("expected EndsInside");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EndsInside);
    }
}

TEST_CASE("path around a vertex and an edge") {
    const auto c = gen_equilateral_disc(3);
    const std::vector<VertexId> kv{0};
    const auto k = Subcomplex::from_parts(c, kv);
    CHECK(path_around(k, {0, 1}, {0, 4}).length() == 3);
    CHECK(path_around(k, {0, 1}, {0, 2}).length() == 1);
    CHECK(path_around(k, {0, 1}, {0, 1}).length() == 1);
    CHECK_THROWS_AS(path_around(k, {1, 2}, {0, 1}), Error);

    const std::vector<VertexId> ev{0, 1};
    const std::vector<std::pair<VertexId, VertexId>> ee{{0, 1}};
    const auto ke = Subcomplex::from_parts(c, ev, ee);
    const std::set<VertexId> kset{0, 1};
    for (Edge a : {Edge{0, 2}, Edge{1, 7}, Edge{0, 4}}) {
        for (Edge b : {Edge{0, 5}, Edge{1, 8}, Edge{1, 2}}) {
            CHECK(path_around(ke, a, b).length() == oracle::path_around_length(c, kset, a, b));
        }
    }
    try {
        path_around(ke, {0, 2}, {1, 8}, 1);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("no path around a cut") {
    const auto c = gen_tree(2, 2);
    const std::vector<VertexId> kv{0};
    const auto k = Subcomplex::from_parts(c, kv);
    const auto nb = c.neighbors(0);
    const Edge a{0, c.id_of(nb[0])}, b{0, c.id_of(nb[1])};
    try {
        path_around(k, a, b);
        FAIL("expected NoPath");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoPath);
    }
}

TEST_CASE("sap probe on the flat disc") {
    const auto c = gen_equilateral_disc(3);
    const auto p = sap_probe(c, 1, 3);
    CHECK(p.exhaustive);
    CHECK_FALSE(p.vacuous);
    CHECK(p.no_path == 0);
    CHECK(replay_sap_witness(c, p.witness) == p.r_emp);
    CHECK(verify_sap_bound(p, 6).passed());
    CHECK_FALSE(verify_sap_bound(p, 1).passed());
    const auto capped = sap_probe(c, 1, 3, 1);
    CHECK_FALSE(capped.exhaustive);
    CHECK_THROWS_AS(verify_sap_bound(capped, 6), Error);
}

TEST_CASE("sap probe on a tree has no paths around") {
    const auto p = sap_probe(gen_tree(2, 3), 0, 1);
    CHECK(p.no_path > 0);
    CHECK_FALSE(verify_sap_bound(p, 6).passed());
}

TEST_CASE("hexagon decomposition") {
    const auto c = gen_equilateral_disc(2);
    const DistanceMatrix d(c);
    std::vector<int> ring;
    for (VertexId v : {1, 2, 3, 4, 5, 6}) ring.push_back(c.index_of(v));
    const auto h = as_hexagon(c, d, ring);
    REQUIRE(h.has_value());
    std::size_t total = 0;
    for (const auto& s : *h) total += s.size() - 1;
    CHECK(total == 6);
    const auto cycles = embedded_cycles(c, 3);
    CHECK(cycles.size() == c.cell_count());
}

TEST_CASE("tight hexagon probe") {
    const auto c = gen_equilateral_disc(2);
    const auto r = tight_hexagon_probe(c, 14, HexagonSampling{});
    CHECK(r.passed());
    CHECK(r.stats.at("empirical_N").get<int>() <= 14);
    HexagonSampling sample;
    sample.exhaustive = false;
    sample.samples = 10;
    const auto s = tight_hexagon_probe(c, 14, sample);
    CHECK(s.stats.at("cycles") == 10);
    CHECK(to_json(s).dump() == to_json(tight_hexagon_probe(c, 14, sample)).dump());
}
