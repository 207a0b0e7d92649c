#include <doctest.h>

#include "aut120/scenario_io.hpp"

using namespace aut120;

TEST_CASE("scenario text round trip") {
    auto s = scenario_preset("3-34-18");
    auto text = scenario_to_text(s);
    auto back = scenario_from_text(text);
    CHECK(back.model.c == s.model.c);
    CHECK(back.model.f == s.model.f);
    CHECK(back.k2 == s.k2);
    CHECK(back.dual_distance_lb == s.dual_distance_lb);
    CHECK(back.symmetry == s.symmetry);
    for (int x = 0; x <= s.model.c; ++x) {
        for (int y = 0; y <= s.model.f; ++y)
            CHECK(back.zero_forced(x, y) == s.zero_forced(x, y));
    }
}

TEST_CASE("scenario parse errors") {
    CHECK_THROWS_AS(scenario_from_text("[model]\nambient_d = 24\n"), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_text("[model]\ntype = nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_text("stray line\n"), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_text("[model]\ntype = 3-(34;18)\nbogus = 1\n"),
                    std::invalid_argument);
}

TEST_CASE("assumption lines carry citations") {
    auto s = scenario_from_text(
        "[model]\n"
        "type = 3-(36;12)\n"
        "ambient_d = 24\n"
        "[assume]\n"
        "dual_distance_min 4 ; lifted-weight bound\n");
    REQUIRE(s.assumptions.size() == 1);
    CHECK(s.assumptions[0].kind == "dual_distance_min");
    CHECK(s.assumptions[0].value == 4);
    CHECK(s.assumptions[0].citation == "lifted-weight bound");
    CHECK(s.dual_distance_lb == 4);
}

TEST_CASE("extra zero cells from a file") {
    auto s = scenario_from_text(
        "[model]\n"
        "type = 3-(34;18)\n"
        "[zero]\n"
        "8 0 extra\n");
    CHECK(s.zero_forced(8, 0));
}

TEST_CASE("fact table text round trip") {
    auto t = FactTable::defaults();
    auto text = facts_to_text(t);
    auto back = facts_from_text(text);
    REQUIRE(back.facts.size() == t.facts.size());
    for (size_t i = 0; i < t.facts.size(); ++i) {
        CHECK(back.facts[i].id == t.facts[i].id);
        CHECK(back.facts[i].citation == t.facts[i].citation);
        CHECK(back.facts[i].statement == t.facts[i].statement);
    }
}

TEST_CASE("fact file with comments and blanks") {
    auto t = facts_from_text(
        "# exclusion facts\n"
        "\n"
        "[fact]\n"
        "no-order-38 ; [BW] ; no element of order 38\n");
    REQUIRE(t.facts.size() == 1);
    CHECK(t.facts[0].id == "no-order-38");
    CHECK(t.facts[0].citation == "[BW]");
}
