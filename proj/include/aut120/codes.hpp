#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "aut120/rational.hpp"

namespace aut120 {

// Word-packed bit vector of length <= 128. Lengths in this project never
// exceed 120 coordinates.
struct BitVec {
    uint64_t lo = 0, hi = 0;

    bool get(int i) const {
        return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
    }
    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i < 64 ? i : i - 64);
        uint64_t& w = i < 64 ? lo : hi;
        if (v) w |= m; else w &= ~m;
    }
    BitVec operator^(const BitVec& o) const { return {lo ^ o.lo, hi ^ o.hi}; }
    BitVec& operator^=(const BitVec& o) { lo ^= o.lo; hi ^= o.hi; return *this; }
    BitVec operator&(const BitVec& o) const { return {lo & o.lo, hi & o.hi}; }
    bool operator==(const BitVec& o) const = default;
    auto operator<=>(const BitVec& o) const = default;
    int weight() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
    bool zero() const { return lo == 0 && hi == 0; }
    // parity of <a,b> over GF(2)
    bool dot(const BitVec& o) const {
        return ((__builtin_popcountll(lo & o.lo) + __builtin_popcountll(hi & o.hi)) & 1) != 0;
    }
};

class BitMatrix {
  public:
    BitMatrix(int cols, std::vector<BitVec> rows);
    explicit BitMatrix(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rows() const { return int(rows_.size()); }
    const BitVec& row(int i) const { return rows_[i]; }
    const std::vector<BitVec>& row_data() const { return rows_; }
    bool get(int r, int c) const { return rows_[r].get(c); }
    void append_row(const BitVec& v) { rows_.push_back(v); }
    bool operator==(const BitMatrix& o) const = default;

    std::string to_string() const;

  private:
    int cols_;
    std::vector<BitVec> rows_;
};

// Reduced row echelon form over GF(2); zero rows dropped. Returns rank.
std::pair<BitMatrix, int> rref(const BitMatrix& m);

// Exact weight -> count map for a code of length n.
struct WeightVector {
    int n = 0;
    std::map<int, Int> counts;

    Int total() const;
    bool operator==(const WeightVector& o) const = default;
    std::string to_string() const;
};

struct CodeClass {
    bool self_orthogonal = false;
    bool self_dual = false;
    bool doubly_even = false;
    int min_distance = 0;
};

// Binary linear code, canonicalized to RREF generator on construction so
// that code equality is generator equality.
class LinearCode {
  public:
    LinearCode(int n, std::vector<BitVec> generators);

    int length() const { return n_; }
    int dimension() const { return k_; }
    const BitMatrix& generator() const { return gen_; }

    LinearCode dual_basis() const;
    WeightVector weight_distribution() const;   // requires k <= 28
    CodeClass classify() const;                 // requires k <= 28
    bool contains(const BitVec& v) const;
    bool operator==(const LinearCode& o) const = default;

    // Enumerates all 2^k codewords (k <= 28), invoking fn on each.
    template <typename F>
    void for_each_codeword(F&& fn) const {
        check_enumerable();
        // Gray-code walk: flip one generator per step.
        BitVec cur{};
        fn(cur);
        uint32_t prev = 0;
        for (uint64_t i = 1; i < (uint64_t(1) << k_); ++i) {
            uint32_t g = uint32_t(i) ^ uint32_t(i >> 1);
            uint32_t diff = g ^ prev;
            cur ^= gen_.row(__builtin_ctz(diff));
            prev = g;
            fn(cur);
        }
    }

    // Text format: first line "n k", then k lines of exactly n chars in {0,1}.
    static LinearCode from_text(std::istream& in);
    static LinearCode from_file(const std::string& path);
    std::string to_text() const;

  private:
    void check_enumerable() const;
    BitMatrix gen_;
    int n_ = 0;
    int k_ = 0;
};

}  // namespace aut120
