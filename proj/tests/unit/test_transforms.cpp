#include <doctest.h>

#include <random>

#include "aut120/feasibility.hpp"
#include "aut120/transforms.hpp"
#include "support/fixtures.hpp"

using namespace aut120;
using namespace aut120::testing;

namespace {

// independent oracle: K_k(x; n) = [y^k] (1+y)^(n-x) (1-y)^x
Int kraw_oracle(int k, int x, int n) {
    std::vector<Int> poly{1};
    auto mul = [&](Int c0, Int c1) {
        std::vector<Int> out(poly.size() + 1, Int(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i] * c0;
            out[i + 1] += poly[i] * c1;
        }
        poly = std::move(out);
    };
    for (int i = 0; i < n - x; ++i) mul(1, 1);
    for (int i = 0; i < x; ++i) mul(1, -1);
    return k < int(poly.size()) ? poly[k] : Int(0);
}

}  // namespace

TEST_CASE("krawtchouk basics") {
    CHECK(krawtchouk(0, 5, 10) == 1);
    CHECK(krawtchouk(1, 3, 10) == 4);
    CHECK(krawtchouk(2, 1, 4) == 0);
    CHECK_THROWS_AS(krawtchouk(5, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk(-1, 0, 4), std::invalid_argument);
}

TEST_CASE("krawtchouk agrees with the generating-function oracle") {
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + int(rng() % 40);
        int k = int(rng() % (n + 1));
        int x = int(rng() % (n + 1));
        CHECK(krawtchouk(k, x, n) == kraw_oracle(k, x, n));
    }
}

TEST_CASE("orthogonality and reciprocity on a table") {
    for (int n : {1, 2, 5, 12}) {
        KrawtchoukTable K(n);
        for (int r = 0; r <= n; ++r) {
            for (int s = 0; s <= n; ++s) {
                Int tot = 0;
                for (int x = 0; x <= n; ++x) tot += binomial(n, x) * K(r, x) * K(s, x);
                CHECK(tot == (r == s ? pow2(n) * binomial(n, r) : Int(0)));
            }
        }
        for (int x = 0; x <= n; ++x) {
            for (int k = 0; k <= n; ++k)
                CHECK(binomial(n, x) * K(k, x) == binomial(n, k) * K(x, k));
        }
    }
}

TEST_CASE("macwilliams on the named examples") {
    WeightVector rep{2, {{0, 1}, {2, 1}}};
    CHECK(macwilliams(rep, 2, 1) == rep);

    WeightVector ham{8, {{0, 1}, {4, 14}, {8, 1}}};
    CHECK(macwilliams(ham, 8, 4) == ham);

    WeightVector full1{1, {{0, 1}, {1, 1}}};
    auto zero = macwilliams(full1, 1, 1);
    CHECK(zero.counts == std::map<int, Int>{{0, 1}});
}

TEST_CASE("macwilliams flags a non-code distribution") {
    WeightVector fake{4, {{0, 1}, {1, 2}, {3, 1}}};
    CHECK_THROWS_AS(macwilliams(fake, 4, 2), std::domain_error);
}

TEST_CASE("double transform is the identity") {
    std::mt19937 rng(5);
    for (int t = 0; t < 12; ++t) {
        int n = 4 + int(rng() % 12);
        int k = 1 + int(rng() % (n - 1));
        std::vector<BitVec> rows;
        std::uniform_int_distribution<uint64_t> dist;
        for (int i = 0; i < k; ++i) {
            BitVec v{dist(rng) & ((1ull << n) - 1), 0};
            rows.push_back(v);
        }
        LinearCode c(n, rows);
        auto w = c.weight_distribution();
        auto dual = macwilliams(w, n, c.dimension());
        CHECK(macwilliams(dual, n, n - c.dimension()) == w);
    }
}

TEST_CASE("macwilliams equals brute-forced dual distribution") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<uint64_t> dist;
    int done = 0;
    while (done < 25) {
        int n = 4 + int(rng() % 17);  // up to 20
        int k = 1 + int(rng() % std::min(n, 12));
        std::vector<BitVec> rows;
        for (int i = 0; i < k; ++i) rows.push_back({dist(rng) & ((1ull << n) - 1), 0});
        LinearCode c(n, rows);
        auto lhs = macwilliams(c.weight_distribution(), n, c.dimension());
        auto rhs = c.dual_basis().weight_distribution();
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("split transform equals brute-forced dual split table") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<uint64_t> dist;
    for (int t = 0; t < 12; ++t) {
        int n = 6 + int(rng() % 11);
        int k = 1 + int(rng() % std::min(n - 1, 10));
        std::vector<BitVec> rows;
        for (int i = 0; i < k; ++i) rows.push_back({dist(rng) & ((1ull << n) - 1), 0});
        LinearCode c(n, rows);
        // random bipartition
        std::vector<int> coords(n);
        std::iota(coords.begin(), coords.end(), 0);
        std::shuffle(coords.begin(), coords.end(), rng);
        int csize = 1 + int(rng() % (n - 1));
        std::vector<int> first(coords.begin(), coords.begin() + csize);
        std::sort(first.begin(), first.end());
        auto table = split_weight_distribution(c, first);
        auto dual_table = split_weight_distribution(c.dual_basis(), first);
        CHECK(split_macwilliams(table) == dual_table);
    }
}

TEST_CASE("split transform on a self-dual code is a fixed point") {
    std::mt19937 rng(17);
    for (int t = 0; t < 5; ++t) {
        int n = 2 * (3 + int(rng() % 6));
        auto c = random_self_dual(n, rng);
        std::vector<int> coords(n);
        std::iota(coords.begin(), coords.end(), 0);
        std::shuffle(coords.begin(), coords.end(), rng);
        std::vector<int> first(coords.begin(), coords.begin() + n / 2);
        std::sort(first.begin(), first.end());
        auto table = split_weight_distribution(c, first);
        CHECK(split_macwilliams(table) == table);
    }
}

TEST_CASE("split transform of the zero code gives binomial products") {
    SplitWeightTable z;
    z.c = 2;
    z.f = 2;
    z.k = 0;
    z.entries[{0, 0}] = 1;
    auto full = split_macwilliams(z);
    for (int r = 0; r <= 2; ++r) {
        for (int i = 0; i <= 2; ++i)
            CHECK(full.entries[{r, i}] == binomial(2, r) * binomial(2, i));
    }
}

TEST_CASE("split transform fixed point on the named [4,2] code") {
    // {0000, 1100, 0011, 1111} split as (2,2)
    SplitWeightTable t;
    t.c = 2;
    t.f = 2;
    t.k = 2;
    t.entries[{0, 0}] = 1;
    t.entries[{2, 0}] = 1;
    t.entries[{0, 2}] = 1;
    t.entries[{2, 2}] = 1;
    CHECK(split_macwilliams(t) == t);
}

TEST_CASE("power moment system shape and the trivial case") {
    auto rels = power_moment_system(2, 1, {2});
    REQUIRE(rels.size() == 3);
    // A2 = 1 and 2*A2 = 2
    CHECK(rels[0].coeffs == std::map<std::string, Rat>{{"A2", 1}});
    CHECK(rels[0].constant == 1);
    CHECK(rels[1].coeffs == std::map<std::string, Rat>{{"A2", 2}});
    CHECK(rels[1].constant == 2);
}
