// rational.hpp : arbitrary-precision integers and rationals (GMP-backed)
#pragma once

#include <gmpxx.h>

#include <string>

namespace hspace {

using Int = mpz_class;

// Always canonical: reduced to lowest terms, denominator > 0.  mpq_class
// maintains this through canonicalize(), which every constructor below
// guarantees.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q" and plain decimal strings ("0.99" -> 99/100), all exact.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& r);

// r^e for integer e (e < 0 requires r != 0).
Rational rational_pow(const Rational& r, long e);

// If r is the square of a rational, stores it in root and returns true.
bool rational_sqrt_exact(const Rational& r, Rational& root);

double to_double(const Rational& r);

} // namespace hspace
