#pragma once

#include <gmpxx.h>

#include <string>

#include "oscpath/errors.hpp"

namespace oscpath {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, kept in canonical form.
using Rational = mpq_class;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Row n of Pascal's triangle: C(n, 0), ..., C(n, n).
inline std::vector<Integer> binomial_row(long n) {
    std::vector<Integer> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) row.push_back(binomial(n, k));
    return row;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw EvalError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// x^e for integer e of either sign; x == 0 with e < 0 is an EvalError.
inline Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    Rational base = x;
    long n = e;
    if (n < 0) {
        if (x == 0) throw EvalError("negative power of zero");
        base = Rational(x.get_den(), x.get_num());
        base.canonicalize();
        n = -n;
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(n));
    r.canonicalize();
    return r;
}

inline Integer integer_pow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

}  // namespace oscpath
