#include "aut120/transforms.hpp"

#include <stdexcept>

#include "aut120/feasibility.hpp"

namespace aut120 {

Int krawtchouk(int k, int x, int n) {
    if (n < 0 || k < 0 || x < 0 || k > n || x > n)
        throw std::invalid_argument("krawtchouk: need 0 <= k, x <= n");
    Int s = 0;
    for (int j = 0; j <= std::min(k, x); ++j) {
        Int term = binomial(x, j) * binomial(n - x, k - j);
        if (j & 1) s -= term;
        else s += term;
    }
    return s;
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("KrawtchoukTable: negative n");
    values_.resize(size_t(n + 1) * size_t(n + 1));
    for (int k = 0; k <= n; ++k)
        for (int x = 0; x <= n; ++x)
            values_[size_t(k) * (n + 1) + x] = krawtchouk(k, x, n);
}

const Int& KrawtchoukTable::operator()(int k, int x) const {
    if (k < 0 || x < 0 || k > n_ || x > n_)
        throw std::invalid_argument("KrawtchoukTable: index out of range");
    return values_[size_t(k) * (n_ + 1) + x];
}

WeightVector macwilliams(const WeightVector& w, int n, int k) {
    if (w.n != n) throw std::invalid_argument("macwilliams: length mismatch");
    if (w.total() != pow2(k))
        throw std::invalid_argument("macwilliams: counts must sum to 2^k");
    KrawtchoukTable K(n);
    Int div = pow2(k);
    WeightVector out;
    out.n = n;
    for (int j = 0; j <= n; ++j) {
        Int s = 0;
        for (const auto& [i, a] : w.counts) s += a * K(j, i);
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), div.get_mpz_t());
        if (r != 0)
            throw std::domain_error("macwilliams: non-integral dual coefficient at weight " +
                                    std::to_string(j) + " (input is not a code distribution)");
        if (q != 0) out.counts[j] = q;
    }
    return out;
}

Int SplitWeightTable::total() const {
    Int s = 0;
    for (const auto& [xy, a] : entries) s += a;
    return s;
}

SplitWeightTable split_macwilliams(const SplitWeightTable& t) {
    if (t.total() != pow2(t.k))
        throw std::invalid_argument("split_macwilliams: entries must sum to 2^k");
    KrawtchoukTable Kc(t.c), Kf(t.f);
    Int div = pow2(t.k);
    SplitWeightTable out;
    out.c = t.c;
    out.f = t.f;
    out.k = t.c + t.f - t.k;  // dual dimension
    for (int r = 0; r <= t.c; ++r) {
        for (int i = 0; i <= t.f; ++i) {
            Int s = 0;
            for (const auto& [wv, a] : t.entries) s += a * Kc(r, wv.first) * Kf(i, wv.second);
            Int q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t(), div.get_mpz_t());
            if (rem != 0)
                throw std::domain_error("split_macwilliams: non-integral entry at (" +
                                        std::to_string(r) + "," + std::to_string(i) + ")");
            if (q != 0) out.entries[{r, i}] = q;
        }
    }
    return out;
}

SplitWeightTable split_weight_distribution(const LinearCode& code,
                                           const std::vector<int>& first_block) {
    BitVec mask{};
    for (int c : first_block) {
        if (c < 0 || c >= code.length())
            throw std::invalid_argument("split_weight_distribution: coordinate out of range");
        if (mask.get(c)) throw std::invalid_argument("split_weight_distribution: repeated coordinate");
        mask.set(c, true);
    }
    SplitWeightTable t;
    t.c = int(first_block.size());
    t.f = code.length() - t.c;
    t.k = code.dimension();
    std::map<std::pair<int, int>, long> tally;
    code.for_each_codeword([&](const BitVec& v) {
        int x = (v & mask).weight();
        ++tally[{x, v.weight() - x}];
    });
    for (const auto& [xy, cnt] : tally) t.entries[xy] = cnt;
    return t;
}

std::vector<AffineRelation> power_moment_system(int n, int k,
                                                const std::vector<int>& support) {
    for (int j : support) {
        if (j < 0 || j > n) throw std::invalid_argument("power_moment_system: weight out of range");
    }
    auto name = [](int j) { return "A" + std::to_string(j); };
    AffineRelation m0, m1, m2;
    for (int j : support) {
        if (j == 0) continue;
        m0.add_term(name(j), 1);
        m1.add_term(name(j), j);
        m2.add_term(name(j), Int(j) * j);
    }
    m0.constant = Rat(pow2(k) - 1);
    m1.constant = Rat(pow2(k - 1) * n);
    m2.add_term("B2", -Rat(pow2(k - 1)));
    m2.constant = Rat(pow2(k - 2) * n * (n + 1));
    return {m0, m1, m2};
}

}  // namespace aut120
