#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/io.hpp"
#include "npc/suite.hpp"

using namespace npc;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "npc_test_suite";
    fs::create_directories(dir);
    return dir;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("empty suite passes with zero checks") {
    const auto cfg = parse_suite_config({{"format", "npc-suite-v1"}, {"checks", json::array()}});
    const auto r = run_suite(cfg);
    CHECK(r.passed());
    CHECK(r.entries.empty());
    CHECK(to_json(r).at("verdict") == "pass");
}

TEST_CASE("config errors") {
    const auto dir = scratch();
    save(dir / "d1.json", gen_equilateral_disc(1));
    CHECK(kind_of([&] { parse_suite_config({{"format", "npc-suite-v2"}}, dir); }) == ErrorKind::ConfigError);
    CHECK(kind_of([&] {
              parse_suite_config({{"format", "npc-suite-v1"}, {"checks", {{{"name", "frobnicate"}, {"target", "d1.json"}}}}}, dir);
          }) == ErrorKind::ConfigError);
    try {
        parse_suite_config({{"format", "npc-suite-v1"}, {"checks", {{{"name", "validate"}, {"target", "missing.json"}}}}}, dir);
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConfigError);
        CHECK(e.message().find("missing.json") != std::string::npos);
    }
    CHECK(kind_of([&] { load_suite_config(dir / "nope.json"); }) == ErrorKind::ConfigError);
}

TEST_CASE("check errors become failures naming the error class") {
    const auto dir = scratch();
    save(dir / "poly.json", gen_polygon(5));
    save(dir / "c4.json", gen_cycle_graph(4));
    const auto cfg = parse_suite_config({{"format", "npc-suite-v1"},
                                         {"checks",
                                          {{{"name", "weakly_systolic"}, {"target", "poly.json"}},
                                           {{"name", "weakly_systolic"}, {"target", "c4.json"}},
                                           {{"name", "validate"}, {"target", "c4.json"}}}}},
                                        dir);
    const auto r = run_suite(cfg);
    REQUIRE(r.entries.size() == 3);
    CHECK_FALSE(r.passed());
    CHECK(r.entries[0].report.witness.at("error") == "KindMismatch");
    CHECK(r.entries[1].report.witness.at("condition") == "V");
    CHECK(r.entries[2].report.passed());
}

TEST_CASE("reports are stable apart from the wall time") {
    const auto dir = scratch();
    save(dir / "d2.json", gen_equilateral_disc(2));
    const json config = {{"format", "npc-suite-v1"},
                         {"checks",
                          {{{"name", "weakly_systolic"}, {"target", "d2.json"}},
                           {{"name", "tight_hexagons"}, {"target", "d2.json"}, {"params", {{"max_perimeter", 6}}}},
                           {{"name", "triangle_fillings"}, {"target", "d2.json"}, {"params", {{"radius", 1}}}}}}};
    auto a = to_json(run_suite(parse_suite_config(config, dir)));
    auto cfg = parse_suite_config(config, dir);
    cfg.threads = 3;
    auto b = to_json(run_suite(cfg));
    CHECK(a.back().is_number());
    a.erase("wall_time_s");
    b.erase("wall_time_s");
    CHECK(a.dump() == b.dump());
    CHECK(a.at("verdict") == "pass");
}

TEST_CASE("every advertised check name is accepted") {
    const auto dir = scratch();
    save(dir / "d1.json", gen_equilateral_disc(1));
    for (const auto& name : suite_check_names()) {
        CHECK_NOTHROW(parse_suite_config({{"format", "npc-suite-v1"}, {"checks", {{{"name", name}, {"target", "d1.json"}}}}}, dir));
    }
}
