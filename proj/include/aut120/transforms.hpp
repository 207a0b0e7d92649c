#pragma once

#include <map>
#include <utility>
#include <vector>

#include "aut120/codes.hpp"
#include "aut120/rational.hpp"

namespace aut120 {

struct AffineRelation;  // feasibility.hpp

// K_k(x; n) = sum_j (-1)^j C(x,j) C(n-x,k-j), exact.
Int krawtchouk(int k, int x, int n);

// Memoized table of all K_k(x; n) for one n; write-once, then read-only.
class KrawtchoukTable {
  public:
    explicit KrawtchoukTable(int n);
    int n() const { return n_; }
    const Int& operator()(int k, int x) const;

  private:
    int n_;
    std::vector<Int> values_;  // (n+1) x (n+1), row k, col x
};

// Dual distribution B_j = (1/2^k) sum_i A_i K_j(i; n). Throws std::domain_error
// when an output is non-integral (input was not a code distribution).
WeightVector macwilliams(const WeightVector& w, int n, int k);

// Joint weight distribution A_(x,y) over a (c, f) coordinate bipartition.
struct SplitWeightTable {
    int c = 0, f = 0, k = 0;
    std::map<std::pair<int, int>, Int> entries;

    Int total() const;
    bool operator==(const SplitWeightTable& o) const = default;
};

// A'_(r,i) = (1/2^k) sum_{w,v} A_(w,v) K_r(w; c) K_i(v; f); exact, throws on
// non-integral entries.
SplitWeightTable split_macwilliams(const SplitWeightTable& t);

// Brute-force split distribution of a code: first block = the given
// coordinates (in order), second block = the rest. Oracle for the transform.
SplitWeightTable split_weight_distribution(const LinearCode& code,
                                           const std::vector<int>& first_block);

// The three power-moment relations for an [n,k] code with B_1 = 0, over
// variables {A_j : j in support} and B2:
//   sum A_j = 2^k - 1
//   sum j A_j = 2^(k-1) n
//   sum j^2 A_j = 2^(k-2) n (n+1) + 2^(k-1) B2
std::vector<AffineRelation> power_moment_system(int n, int k,
                                                const std::vector<int>& support);

}  // namespace aut120
