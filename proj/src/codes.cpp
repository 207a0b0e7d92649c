#include "aut120/codes.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aut120 {

namespace {
constexpr int kMaxLen = 128;
constexpr int kEnumGuard = 28;  // 2^28 words is the enumeration ceiling
}  // namespace

BitMatrix::BitMatrix(int cols, std::vector<BitVec> rows)
    : cols_(cols), rows_(std::move(rows)) {
    if (cols < 1 || cols > kMaxLen)
        throw std::invalid_argument("BitMatrix: column count out of range");
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        for (int c = 0; c < cols_; ++c) s += r.get(c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

std::pair<BitMatrix, int> rref(const BitMatrix& m) {
    std::vector<BitVec> rows = m.row_data();
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < int(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < int(rows.size()); ++i) {
            if (rows[i].get(col)) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    rows.resize(rank);
    return {BitMatrix(m.cols(), std::move(rows)), rank};
}

Int WeightVector::total() const {
    Int s = 0;
    for (const auto& [w, c] : counts) s += c;
    return s;
}

std::string WeightVector::to_string() const {
    std::string s;
    for (const auto& [w, c] : counts) {
        if (!s.empty()) s += ' ';
        s += std::to_string(w) + ":" + c.get_str();
    }
    return s;
}

LinearCode::LinearCode(int n, std::vector<BitVec> generators) : gen_(n), n_(n) {
    auto [g, rank] = rref(BitMatrix(n, std::move(generators)));
    gen_ = std::move(g);
    k_ = rank;
}

void LinearCode::check_enumerable() const {
    if (k_ > kEnumGuard)
        throw std::domain_error("code dimension " + std::to_string(k_) +
                                " exceeds enumeration guard " + std::to_string(kEnumGuard));
}

LinearCode LinearCode::dual_basis() const {
    // kernel basis from the RREF generator: one vector per free column
    std::vector<int> pivot_col(k_);
    std::vector<bool> is_pivot(n_, false);
    for (int r = 0; r < k_; ++r) {
        for (int c = 0; c < n_; ++c) {
            if (gen_.get(r, c)) { pivot_col[r] = c; is_pivot[c] = true; break; }
        }
    }
    std::vector<BitVec> basis;
    for (int c = 0; c < n_; ++c) {
        if (is_pivot[c]) continue;
        BitVec v{};
        v.set(c, true);
        for (int r = 0; r < k_; ++r) {
            if (gen_.get(r, c)) v.set(pivot_col[r], true);
        }
        basis.push_back(v);
    }
    return LinearCode(n_, std::move(basis));
}

WeightVector LinearCode::weight_distribution() const {
    WeightVector wv;
    wv.n = n_;
    std::vector<long> tally(n_ + 1, 0);
    for_each_codeword([&](const BitVec& v) { ++tally[v.weight()]; });
    for (int w = 0; w <= n_; ++w) {
        if (tally[w]) wv.counts[w] = tally[w];
    }
    return wv;
}

CodeClass LinearCode::classify() const {
    CodeClass cc;
    cc.self_orthogonal = true;
    for (int i = 0; i < k_ && cc.self_orthogonal; ++i) {
        for (int j = i; j < k_; ++j) {
            if (gen_.row(i).dot(gen_.row(j))) { cc.self_orthogonal = false; break; }
        }
    }
    cc.self_dual = cc.self_orthogonal && n_ == 2 * k_;
    cc.doubly_even = true;
    int d = n_ + 1;
    for_each_codeword([&](const BitVec& v) {
        int w = v.weight();
        if (w % 4 != 0) cc.doubly_even = false;
        if (w > 0 && w < d) d = w;
    });
    cc.min_distance = (d <= n_) ? d : 0;
    return cc;
}

bool LinearCode::contains(const BitVec& v) const {
    BitVec r = v;
    for (int i = 0; i < k_; ++i) {
        int pc = -1;
        for (int c = 0; c < n_; ++c) {
            if (gen_.get(i, c)) { pc = c; break; }
        }
        if (pc >= 0 && r.get(pc)) r ^= gen_.row(i);
    }
    return r.zero();
}

LinearCode LinearCode::from_text(std::istream& in) {
    int n = 0, k = 0;
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("generator file: missing header");
    {
        std::istringstream hs(header);
        if (!(hs >> n >> k)) throw std::invalid_argument("generator file: header must be \"n k\"");
    }
    if (n < 1 || n > kMaxLen || k < 0 || k > n)
        throw std::invalid_argument("generator file: bad dimensions");
    std::vector<BitVec> rows;
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw std::invalid_argument("generator file: missing row");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (int(line.size()) != n)
            throw std::invalid_argument("generator file: row must have exactly n characters");
        BitVec v{};
        for (int c = 0; c < n; ++c) {
            if (line[c] == '1') v.set(c, true);
            else if (line[c] != '0')
                throw std::invalid_argument("generator file: rows are over {0,1}");
        }
        rows.push_back(v);
    }
    return LinearCode(n, std::move(rows));
}

LinearCode LinearCode::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return from_text(in);
}

std::string LinearCode::to_text() const {
    std::string s = std::to_string(n_) + " " + std::to_string(k_) + "\n";
    for (int r = 0; r < k_; ++r) {
        for (int c = 0; c < n_; ++c) s += gen_.get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace aut120
