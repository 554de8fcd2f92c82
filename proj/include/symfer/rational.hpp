#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace symfer {

using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; always build rationals here.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

// binomial(n, k) for n >= 0; returns 0 for k < 0 or k > n
inline mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

} // namespace symfer
