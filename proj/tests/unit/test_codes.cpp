#include <doctest.h>

#include <random>
#include <sstream>

#include "aut120/codes.hpp"
#include "support/fixtures.hpp"

using namespace aut120;
using namespace aut120::testing;

TEST_CASE("rref identity and duplicate rows") {
    BitVec r0{}, r1{};
    r0.set(0, true);
    r1.set(1, true);
    auto [m, rank] = rref(BitMatrix(2, {r0, r1}));
    CHECK(rank == 2);
    CHECK(m.get(0, 0));
    CHECK(m.get(1, 1));

    BitVec both{};
    both.set(0, true);
    both.set(1, true);
    auto [m2, rank2] = rref(BitMatrix(2, {both, both}));
    CHECK(rank2 == 1);
    CHECK(m2.rows() == 1);
}

TEST_CASE("rref of the extended Hamming generator has rank 4") {
    auto code = extended_hamming8();
    CHECK(code.dimension() == 4);
    auto [m, rank] = rref(code.generator());
    CHECK(rank == 4);
}

TEST_CASE("dual of the repetition code") {
    BitVec ones{};
    ones.set(0, true);
    ones.set(1, true);
    LinearCode rep(2, {ones});
    auto dual = rep.dual_basis();
    CHECK(dual == rep);
}

TEST_CASE("dual of [4,1] {1110} contains 0001") {
    BitVec g{};
    g.set(0, true);
    g.set(1, true);
    g.set(2, true);
    LinearCode c(4, {g});
    auto dual = c.dual_basis();
    CHECK(dual.dimension() == 3);
    BitVec e3{};
    e3.set(3, true);
    CHECK(dual.contains(e3));
    CHECK_FALSE(c.contains(e3));
}

TEST_CASE("extended Hamming is self-dual: dual equals itself by brute force") {
    auto code = extended_hamming8();
    auto dual = code.dual_basis();
    CHECK(dual == code);
    // every pair of codewords orthogonal
    std::vector<BitVec> words;
    code.for_each_codeword([&](const BitVec& v) { words.push_back(v); });
    CHECK(words.size() == 16);
    for (const auto& u : words) {
        for (const auto& v : words) CHECK_FALSE(u.dot(v));
    }
}

TEST_CASE("weight distributions") {
    BitVec ones{};
    ones.set(0, true);
    ones.set(1, true);
    LinearCode rep(2, {ones});
    auto wv = rep.weight_distribution();
    CHECK(wv.counts == std::map<int, Int>{{0, 1}, {2, 1}});

    // full space of length 3: binomial counts
    BitVec e0{}, e1{}, e2{};
    e0.set(0, true);
    e1.set(1, true);
    e2.set(2, true);
    LinearCode full(3, {e0, e1, e2});
    auto wf = full.weight_distribution();
    CHECK(wf.counts == std::map<int, Int>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});

    auto wh = extended_hamming8().weight_distribution();
    CHECK(wh.counts == std::map<int, Int>{{0, 1}, {4, 14}, {8, 1}});
}

TEST_CASE("classify") {
    auto cc = extended_hamming8().classify();
    CHECK(cc.self_dual);
    CHECK(cc.doubly_even);
    CHECK(cc.min_distance == 4);

    BitVec ones2{};
    ones2.set(0, true);
    ones2.set(1, true);
    auto c2 = LinearCode(2, {ones2}).classify();
    CHECK(c2.self_dual);
    CHECK_FALSE(c2.doubly_even);
    CHECK(c2.min_distance == 2);

    BitVec ones4{};
    for (int i = 0; i < 4; ++i) ones4.set(i, true);
    auto c4 = LinearCode(4, {ones4}).classify();
    CHECK(c4.self_orthogonal);
    CHECK_FALSE(c4.self_dual);
    CHECK(c4.doubly_even);
    CHECK(c4.min_distance == 4);
}

TEST_CASE("generator file round trip and format errors") {
    auto code = extended_hamming8();
    std::istringstream in(code.to_text());
    auto back = LinearCode::from_text(in);
    CHECK(back == code);

    std::istringstream bad1("8 2\n10101010\n1110\n");
    CHECK_THROWS_AS(LinearCode::from_text(bad1), std::invalid_argument);
    std::istringstream bad2("4 1\n1 10\n");  // whitespace inside rows is not allowed
    CHECK_THROWS_AS(LinearCode::from_text(bad2), std::invalid_argument);
    std::istringstream bad3("4 1\n1210\n");
    CHECK_THROWS_AS(LinearCode::from_text(bad3), std::invalid_argument);
}

TEST_CASE("enumeration guard") {
    // 29-dimensional full space would enumerate 2^29 words
    std::vector<BitVec> rows;
    for (int i = 0; i < 29; ++i) {
        BitVec v{};
        v.set(i, true);
        rows.push_back(v);
    }
    LinearCode big(30, rows);
    CHECK_THROWS_AS(big.weight_distribution(), std::domain_error);
}

TEST_CASE("rank-nullity and double dual on random codes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint64_t> dist;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng() % 17);
        int k = 1 + int(rng() % n);
        std::vector<BitVec> rows;
        for (int i = 0; i < k; ++i) {
            BitVec v{dist(rng) & ((n < 64 ? (1ull << n) : 0ull) - 1), 0};
            rows.push_back(v);
        }
        LinearCode c(n, rows);
        auto dual = c.dual_basis();
        CHECK(dual.dimension() == n - c.dimension());
        CHECK(dual.dual_basis() == c);
        for (int i = 0; i < c.dimension(); ++i) {
            for (int j = 0; j < dual.dimension(); ++j)
                CHECK_FALSE(c.generator().row(i).dot(dual.generator().row(j)));
        }
    }
}

TEST_CASE("random self-dual codes are self-dual with even weights") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 * (2 + int(rng() % 8));
        auto c = random_self_dual(n, rng);
        CHECK(c.dimension() == n / 2);
        CHECK(c.classify().self_dual);
        auto wv = c.weight_distribution();
        CHECK(wv.total() == pow2(n / 2));
        for (const auto& [w, cnt] : wv.counts) CHECK(w % 2 == 0);
    }
}
