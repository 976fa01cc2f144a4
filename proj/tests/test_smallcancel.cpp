#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npc/error.hpp"
#include "npc/generators.hpp"
#include "npc/smallcancel.hpp"
#include "npc/words.hpp"
#include "oracles.hpp"

using namespace npc;

TEST_CASE("word utilities") {
    CHECK(words::inverse("abC") == "cBA");
    CHECK(words::free_reduce("abBAc") == "c");
    CHECK(words::cyclic_reduce("aBcbA") == "c");
    CHECK(words::cyclic_reduce("aBcA") == "Bc");
    CHECK(words::is_cyclically_reduced("abAB"));
    CHECK_FALSE(words::is_cyclically_reduced("abA"));
}

TEST_CASE("surface group is C'(1/6) with pieces of length one") {
    for (int genus = 2; genus <= 3; ++genus) {
        const auto p = surface_presentation(genus);
        const auto r = check_c16_presentation(p);
        CHECK(r.passed);
        CHECK(r.max_piece == oracle::naive_max_pieces(p.relators));
        CHECK(*std::max_element(r.max_piece.begin(), r.max_piece.end()) == 1);
    }
}

TEST_CASE("proper powers and short relators fail") {
    CHECK_FALSE(check_c16_presentation(Presentation::make({"a", "b"}, {"ababab"})).passed);
    CHECK_FALSE(check_c16_presentation(Presentation::make({"a", "b"}, {"abAB"})).passed);
    const auto r = check_c16_presentation(Presentation::make({"a", "b"}, {"ababab"}));
    CHECK(r.worst_piece.has_value());
}

TEST_CASE("piece maxima agree with the naive oracle on assorted presentations") {
    const std::vector<std::vector<std::string>> cases = {
        {"aabbbcAcB"}, {"abcABC"}, {"aabAbbcc", "abcabC"}, {"abcdefgh", "aceg"}, {"aaabbbcccAB"}};
    for (const auto& rels : cases) {
        const auto p = Presentation::make({"a", "b", "c", "d", "e", "f", "g", "h"}, rels);
        const auto mine = check_c16_presentation(p).max_piece;
        const auto naive = oracle::naive_max_pieces(rels);
        CHECK(mine == naive);
    }
}

TEST_CASE("cayley complex of the surface group is C'(1/6)") {
    const auto c = gen_cayley_ball(surface_presentation(2), 2);
    const auto r = check_c16_complex(c);
    CHECK(r.passed);
    CHECK(*std::max_element(r.max_piece.begin(), r.max_piece.end()) == 1);
}

TEST_CASE("presentations are validated") {
    CHECK_THROWS_AS(Presentation::make({"a"}, {"aA"}), Error);
    CHECK_THROWS_AS(Presentation::make({"a"}, {""}), Error);
}

TEST_CASE("Dehn reduction") {
    const auto p = surface_presentation(2);
    const DehnSolver s(p);
    CHECK(s.is_trivial("abABcdCD"));
    CHECK(s.is_trivial("cdCDabAB"));
    CHECK(s.is_trivial("dcDCbaBA"));
    CHECK(s.reduce("abABcd") == "dc");
    CHECK_FALSE(s.is_trivial("ab"));
    CHECK(s.is_trivial(""));
}

TEST_CASE("Dehn triviality agrees with the Fuchsian holonomy") {
    const auto p = surface_presentation(2);
    const DehnSolver s(p);
    const oracle::Fuchsian f;
    CHECK(f.trivial("abABcdCD"));
    CHECK_FALSE(f.trivial("a"));
    std::mt19937_64 rng(7);
    const std::string letters = "abABcdCD";
    int trivial = 0;
    for (int i = 0; i < 300; ++i) {
        std::string w;
        const int len = 1 + static_cast<int>(rng() % 12);
        for (int k = 0; k < len; ++k) w.push_back(letters[rng() % 8]);
        const bool expect = f.trivial(w);
        trivial += expect;
        CHECK(s.is_trivial(w) == expect);
    }
    CHECK(trivial < 300);
}
