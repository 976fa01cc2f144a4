#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/metric.hpp"
#include "npc/wsys.hpp"
#include "oracles.hpp"

using namespace npc;

namespace {

// (V) witness check against the definition: `vertex` at distance n, the pair in
// S_{n-1}(v) adjacent to it and not to each other.
bool valid_v_witness(const Complex& c, const json& w) {
    const auto d = oracle::floyd(c);
    const auto nb = oracle::neighbours(c);
    const VertexId v = w.at("v"), x = w.at("vertex"), p = w.at("pair")[0], q = w.at("pair")[1];
    const int n = w.at("n");
    return d(v, x) == n && d(v, p) == n - 1 && d(v, q) == n - 1 && nb.at(x).count(p) && nb.at(x).count(q) &&
           !nb.at(p).count(q) && p != q;
}

}  // namespace

TEST_CASE("weak systolicity calibration") {
    for (int r = 2; r <= 4; ++r) CHECK(check_weakly_systolic(gen_equilateral_disc(r)).passed());
    CHECK(check_weakly_systolic(gen_tree(2, 4)).passed());
    const auto c4 = gen_cycle_graph(4);
    const auto rep = check_weakly_systolic(c4);
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.witness.at("condition") == "V");
    CHECK(valid_v_witness(c4, rep.witness));
    CHECK(to_json(rep.to_report()).dump() == to_json(check_weakly_systolic(c4).to_report()).dump());
}

TEST_CASE("local check") {
    CHECK(check_locally(gen_equilateral_disc(4)).passed());
    CHECK_FALSE(check_locally(gen_cycle_graph(4)).passed());
}

TEST_CASE("conditions reject non-flag and polygonal input") {
    const auto empty_triangle = Complex::make(ComplexKind::Simplicial, {1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}, {});
    try {
        check_weakly_systolic(empty_triangle);
        FAIL("expected NotFlag");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFlag);
    }
    try {
        check_weakly_systolic(gen_polygon(6));
        FAIL("expected KindMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::KindMismatch);
    }
}

TEST_CASE("systolic check") {
    CHECK(check_systolic(gen_equilateral_disc(3)).passed());
    const auto r = check_systolic(gen_cycle_graph(5));
    CHECK_FALSE(r.passed());
    CHECK(r.witness.at("length") == 5);
    CHECK(check_systolic(gen_cycle_graph(6)).passed());
}

TEST_CASE("metric triangles in the flat disc are equilateral") {
    const auto c = gen_equilateral_disc(3);
    CHECK(check_weak_modularity(c).passed());
    const auto t = metric_triangle(c, 0, 19, 23);
    CHECK(t.equilateral());
    const auto d = oracle::floyd(c);
    CHECK(d(t.u1, t.v1) == t.sides[0]);
    CHECK(d(t.v1, t.w1) == t.sides[1]);
    CHECK(d(t.w1, t.u1) == t.sides[2]);
}

TEST_CASE("bigon filling in the flat disc") {
    const auto c = gen_equilateral_disc(3);
    const auto g1 = certify_geodesic(c, {1, 2, 3});
    const auto g2 = certify_geodesic(c, {1, 0, 3});
    for (auto backend : {BigonBackend::Structured, BigonBackend::Oracle}) {
        const auto d = fill_bigon(c, g1, g2, backend);
        CHECK(validate_diagram(d, c).passed());
        CHECK(multiplicity(d) == 1);
    }
    const auto same = fill_bigon(c, g1, g1);
    CHECK(same.area() == 0);
    CHECK(validate_diagram(same, c).passed());
}

TEST_CASE("bigons need matching endpoints") {
    const auto c = gen_equilateral_disc(2);
    CHECK_THROWS_AS(fill_bigon(c, certify_geodesic(c, {0, 1}), certify_geodesic(c, {0, 2})), Error);
    CHECK_THROWS_AS(certify_geodesic(c, {1, 0, 2}), Error);
}

TEST_CASE("triangle and hexagon fillings") {
    const auto c = gen_equilateral_disc(3);
    const auto t = fill_triangle(c, 19, 25, 31);
    CHECK(validate_diagram(t, c).passed());
    CHECK(verify_tight(t, 14).passed());
    CHECK(gauss_bonnet_audit(t).passed());

    std::array<std::vector<VertexId>, 6> hex;
    const std::vector<VertexId> ring{1, 2, 3, 4, 5, 6};
    for (std::size_t i = 0; i < 6; ++i) hex[i] = {ring[i], ring[(i + 1) % 6]};
    const auto h = fill_hexagon(c, hex);
    CHECK(validate_diagram(h, c).passed());
    CHECK(h.area() == 6);
}
