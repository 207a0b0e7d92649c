#pragma once

// Test fixtures: small self-dual codes, explicit automorphisms and the
// projection-by-permutation oracle used to validate the scenario machinery.

#include <random>
#include <stdexcept>
#include <vector>

#include "aut120/codes.hpp"
#include "aut120/transforms.hpp"

namespace aut120::testing {

inline BitVec from_bits(const std::vector<int>& bits) {
    BitVec v{};
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) v.set(int(i), true);
    }
    return v;
}

// extended Hamming code of length 8 as the first-order Reed-Muller code;
// coordinate i carries the evaluation point (i>>2, i>>1 & 1, i & 1)
inline LinearCode extended_hamming8() {
    std::vector<BitVec> rows(4);
    for (int i = 0; i < 8; ++i) {
        rows[0].set(i, true);
        if (i & 4) rows[1].set(i, true);
        if (i & 2) rows[2].set(i, true);
        if (i & 1) rows[3].set(i, true);
    }
    return LinearCode(8, rows);
}

// order-3 linear automorphism of extended_hamming8: (x1,x2,x3) -> (x1, x3, x2+x3);
// fixes coordinates {0,4}, cycles (1 3 2)(5 7 6)
inline std::vector<int> hamming8_order3_perm() {
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) {
        int x1 = (i >> 2) & 1, x2 = (i >> 1) & 1, x3 = i & 1;
        perm[i] = (x1 << 2) | (x3 << 1) | (x2 ^ x3);
    }
    return perm;
}

// binary Golay [24,12,8] as the extended quadratic-residue code of length 23;
// coordinates 0..22 are F_23, coordinate 23 is the extension
inline LinearCode golay24() {
    std::vector<int> qr;
    for (int i = 1; i < 23; ++i) qr.push_back((i * i) % 23);
    std::sort(qr.begin(), qr.end());
    qr.erase(std::unique(qr.begin(), qr.end()), qr.end());
    std::vector<BitVec> rows;
    for (int shift = 0; shift < 23; ++shift) {
        BitVec v{};
        for (int r : qr) v.set((r + shift) % 23, true);
        v.set(23, v.weight() % 2 == 1);
        rows.push_back(v);
    }
    return LinearCode(24, rows);
}

// order-3 element of PSL(2,23) acting on the projective line = the Golay
// coordinates: z -> -1/(z - 1); fixed point free (type 3-(8;0))
inline std::vector<int> golay24_order3_perm() {
    const int q = 23;
    auto inv = [&](int a) {
        for (int x = 1; x < q; ++x) {
            if (a * x % q == 1) return x;
        }
        throw std::logic_error("no inverse");
    };
    std::vector<int> perm(24);
    for (int z = 0; z < 24; ++z) {
        int num, den;
        if (z == 23) {
            num = 0;
            den = 1;
        } else {
            num = (-1 % q + q) % q;
            den = ((z - 1) % q + q) % q;
        }
        perm[z] = den == 0 ? 23 : num * inv(den) % q;
    }
    return perm;
}

// w[perm[i]] = v[i]
inline BitVec permute(const BitVec& v, const std::vector<int>& perm) {
    BitVec w{};
    for (size_t i = 0; i < perm.size(); ++i) {
        if (v.get(int(i))) w.set(perm[i], true);
    }
    return w;
}

inline bool preserves_code(const LinearCode& code, const std::vector<int>& perm) {
    for (int r = 0; r < code.dimension(); ++r) {
        if (!code.contains(permute(code.generator().row(r), perm))) return false;
    }
    return true;
}

struct PermCycles {
    std::vector<std::vector<int>> cycles;  // length-p cycles
    std::vector<int> fixed;
};

inline PermCycles cycle_structure(const std::vector<int>& perm) {
    PermCycles out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc{int(i)};
        seen[i] = true;
        for (int j = perm[i]; j != int(i); j = perm[j]) {
            cyc.push_back(j);
            seen[j] = true;
        }
        if (cyc.size() == 1) out.fixed.push_back(int(i));
        else out.cycles.push_back(std::move(cyc));
    }
    return out;
}

// fixed subcode F_sigma(C), projected through pi (one coordinate per cycle,
// cycles first, then the fixed coordinates)
inline LinearCode project_fixed_code(const LinearCode& code, const std::vector<int>& perm) {
    PermCycles pc = cycle_structure(perm);
    std::vector<BitVec> projected;
    code.for_each_codeword([&](const BitVec& v) {
        if (!(permute(v, perm) == v)) return;
        BitVec w{};
        int pos = 0;
        for (const auto& cyc : pc.cycles) {
            if (v.get(cyc[0])) w.set(pos, true);
            ++pos;
        }
        for (int fx : pc.fixed) {
            if (v.get(fx)) w.set(pos, true);
            ++pos;
        }
        projected.push_back(w);
    });
    return LinearCode(int(pc.cycles.size() + pc.fixed.size()), projected);
}

// split weight table of the projected fixed code, cycle block first
inline SplitWeightTable project_split_table(const LinearCode& code,
                                            const std::vector<int>& perm) {
    PermCycles pc = cycle_structure(perm);
    LinearCode proj = project_fixed_code(code, perm);
    std::vector<int> first;
    for (size_t i = 0; i < pc.cycles.size(); ++i) first.push_back(int(i));
    return split_weight_distribution(proj, first);
}

// random self-dual code of even length n: greedy extension by random
// self-orthogonal vectors
inline LinearCode random_self_dual(int n, std::mt19937& rng) {
    if (n % 2) throw std::invalid_argument("self-dual codes need even length");
    std::vector<BitVec> basis;
    auto orthogonal_to_all = [&](const BitVec& v) {
        for (const auto& b : basis) {
            if (v.dot(b)) return false;
        }
        return !v.dot(v);
    };
    auto independent = [&](const BitVec& v) {
        std::vector<BitVec> rows = basis;
        rows.push_back(v);
        return rref(BitMatrix(n, rows)).second == int(basis.size()) + 1;
    };
    std::uniform_int_distribution<uint64_t> dist;
    while (int(basis.size()) < n / 2) {
        BitVec v{dist(rng), dist(rng)};
        v.lo &= n >= 64 ? ~0ull : ((1ull << n) - 1);
        if (n <= 64) v.hi = 0;
        else v.hi &= (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        if (v.zero()) continue;
        // project onto the orthogonal complement of the current basis by
        // retrying; cheap at test sizes
        if (!orthogonal_to_all(v) || !independent(v)) continue;
        basis.push_back(v);
    }
    return LinearCode(n, basis);
}

}  // namespace aut120::testing
