#pragma once

#include <gmpxx.h>

#include <string>

#include "mf/errors.hpp"

namespace mf {

// Exact rational scalar.  GMP keeps values canonical: gcd(|num|, den) = 1,
// den >= 1, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Canonical "num/den" form, e.g. "-88/1", "3/4".
std::string rational_to_string(const Rational& r);

// Accepts "num/den" or a bare integer "num".
Rational rational_from_string(const std::string& text);

Rational rational_pow(const Rational& base, long exp);
Integer integer_pow(const Integer& base, unsigned long exp);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace mf
