#include <doctest.h>

#include <set>

#include "aut120/groups.hpp"

using namespace aut120;

namespace {

std::vector<long> orders_of(const std::vector<PrimePowerSignature>& sigs, int p) {
    std::vector<long> out;
    for (const auto& s : sigs) {
        if (p == 0 || s.divides(p)) out.push_back(s.order().get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("composite structures are exactly the three allowed types") {
    auto out = composite_structures();
    REQUIRE(out.size() == 3);
    CHECK(out[0].to_string() == "15-(0,0,8;0)");
    CHECK(out[1].to_string() == "57-(2,0,2;0)");
    CHECK(out[2].to_string() == "115-(1,0,1;0)");
    // independent re-check of both power maps for each survivor
    for (const auto& t : out) {
        CHECK(validate_prime_type(t.p, t.s1 + t.s3 * t.r, t.s2 * t.r + t.f));
        CHECK(validate_prime_type(t.r, t.s2 + t.s3 * t.p, t.s1 * t.p + t.f));
    }
}

TEST_CASE("power-map spot checks from the composite table") {
    // cube of 15-(0,0,8;0) is 5-(24;0); 19th power of 57-(2,0,2;0) is 3-(40;0)
    auto t15 = CycleType::composite(3, 5, 0, 0, 8, 0);
    CHECK(t15.s2 + t15.s3 * t15.p == 24);
    CHECK(t15.s1 * t15.p + t15.f == 0);
    auto t57 = CycleType::composite(3, 19, 2, 0, 2, 0);
    CHECK(t57.s1 + t57.s3 * t57.r == 40);
    CHECK(t57.s2 * t57.r + t57.f == 0);
}

TEST_CASE("p-square hypotheses verified for every odd prime") {
    auto checks = p_square_check();
    REQUIRE(checks.size() == 6);
    for (const auto& c : checks) {
        CAPTURE(c.p);
        CHECK(c.verified);
    }
}

TEST_CASE("normalizer primes under the fpf fix table") {
    auto fix = FixTable::fixed_point_free();
    CHECK(normalizer_primes(29, fix) == std::set<int>{2});
    CHECK(normalizer_primes(23, fix) == std::set<int>{5});
    CHECK(normalizer_primes(19, fix) == std::set<int>{2, 3});
    CHECK(normalizer_primes(7, fix) == std::set<int>{});
    CHECK_THROWS_AS(normalizer_primes(3, fix), std::invalid_argument);
}

TEST_CASE("sylow candidate sets match the pinned values") {
    auto fix = FixTable::fixed_point_free();
    auto n29 = sylow_candidates(29, fix);
    std::vector<Int> want29{1, 30, 552, 1596, 3220, 6555};
    CHECK(n29 == want29);
    auto n23 = sylow_candidates(23, fix);
    std::vector<Int> want23{1, 24, 70, 116, 760, 8120};
    CHECK(n23 == want23);
    auto n19 = sylow_candidates(19, fix);
    std::vector<Int> want19{1, 20, 58, 115, 210, 552, 609, 1160, 6670, 12180, 70035};
    CHECK(n19 == want19);
    // every candidate satisfies the Sylow congruence
    for (const auto& n : n29) CHECK(n % 29 == 1);
    for (const auto& n : n23) CHECK(n % 23 == 1);
    for (const auto& n : n19) CHECK(n % 19 == 1);
}

TEST_CASE("cauchy-frobenius orbit counts") {
    auto fix = FixTable::fixed_point_free();
    CHECK(cfl_t(Int(2) * 2 * 2 * 3 * 7 * 19 * 29, {{7, 13224}, {19, 609}, {29, 1596}}, fix) ==
          make_rat(7, 2));
    CHECK(cfl_t(Int(2) * 2 * 2 * 5 * 19 * 23, {{19, 115}, {23, 760}}, fix) == make_rat(11, 2));
    CHECK(cfl_t(1, {}, fix) == 120);
}

TEST_CASE("signature space and order invariants") {
    auto sigs = signature_space();
    CHECK(sigs.size() == 256);
    Int bound = Int(8) * 3 * 5 * 7 * 19 * 23 * 29;
    for (const auto& s : sigs) {
        CHECK(bound % s.order() == 0);
        CHECK(s.e[0] <= 3);
        for (int i = 1; i < 7; ++i) CHECK(s.e[i] <= 1);
    }
}

TEST_CASE("order screen with the default facts") {
    auto res = order_screen(FixTable::fixed_point_free(), FactTable::defaults());
    CHECK(orders_of(res.machine_survivors, 29) ==
          std::vector<long>{29, 58, 116, 232, 870, 1740, 3480});
    CHECK(orders_of(res.machine_survivors, 23) == std::vector<long>{23, 115, 552, 2760});
    CHECK(orders_of(res.machine_survivors, 19) ==
          std::vector<long>{19, 38, 57, 76, 114, 228, 380, 760, 1140, 2280});
    CHECK(orders_of(res.machine_survivors, 7) == std::vector<long>{7, 56, 105, 840});

    CHECK(orders_of(res.survivors, 29) == std::vector<long>{29, 58, 116});
    CHECK(orders_of(res.survivors, 23) == std::vector<long>{23, 115});
    CHECK(orders_of(res.survivors, 19) == std::vector<long>{19, 38, 57, 114});
    CHECK(orders_of(res.survivors, 7) == std::vector<long>{7, 56});
    CHECK(orders_of(res.survivors, 0) ==
          std::vector<long>{1,  2,  3,  4,  5,  6,  7,   8,   10,  12,  15,  19,  20, 23,
                            24, 29, 30, 38, 40, 56, 57,  58,  60,  114, 115, 116, 120});
    // every surviving odd part is square-free and divides the signature bound
    for (const auto& s : res.survivors) {
        for (int i = 1; i < 7; ++i) CHECK(s.e[i] <= 1);
    }
    // every fact exclusion carries a citation
    for (const auto& ev : res.exclusions) {
        if (ev.stage == "fact") CHECK_FALSE(ev.citation.empty());
    }
}

TEST_CASE("removing the order-38 fact grows the screen output") {
    auto facts = FactTable::defaults();
    facts.remove("no-order-38");
    auto res = order_screen(FixTable::fixed_point_free(), facts);
    auto with19 = orders_of(res.survivors, 19);
    CHECK(with19.size() > 4);
    CHECK(std::find(with19.begin(), with19.end(), 76) != with19.end());
}

TEST_CASE("simple factor screen") {
    std::set<int> support{2, 3, 5, 7, 19, 23, 29};
    auto rows = simple_factor_screen(3480, support, true);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].name == "A5");
    CHECK(simple_factor_screen(59, support, true).empty());
    std::set<int> no5{2, 3, 7, 19, 23, 29};
    CHECK(simple_factor_screen(3480, no5, true).empty());
    // without the square-free restriction more groups pass
    CHECK(simple_factor_screen(3480, support, false).size() > 1);
}

TEST_CASE("fact table lookup and parsing interface") {
    auto t = FactTable::defaults();
    CHECK(t.has("no-order-38"));
    CHECK(t.has("no-order-58"));
    CHECK(t.find("group-db-105") != nullptr);
    t.remove("no-order-38");
    CHECK_FALSE(t.has("no-order-38"));
    for (const auto& f : FactTable::defaults().facts) CHECK_FALSE(f.citation.empty());
}

TEST_CASE("exploratory fix table changes the normalizer analysis") {
    auto fix = FixTable::with_involution_fixed_points();
    CHECK(fix.at(2) == 24);
    // with involutions allowed to fix points, r = 2 becomes admissible for p = 23
    auto np = normalizer_primes(23, fix);
    CHECK(np.count(2) == 1);
}
