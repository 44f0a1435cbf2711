#pragma once

#include <gmpxx.h>

#include <string>

namespace jackpoly {

// Arbitrary-precision exact rationals; the coefficient domain under Q(α).
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(p, q) does not canonicalize on its own.
inline Rational make_rational(Integer num, Integer den) {
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// "p" or "p/q", q > 0, reduced.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer factorial(unsigned long k);

}  // namespace jackpoly
