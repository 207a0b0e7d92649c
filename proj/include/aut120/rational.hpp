#pragma once

#include <gmpxx.h>
#include <string>

namespace aut120 {

// All engine arithmetic is exact: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace aut120
