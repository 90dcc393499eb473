#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nullcert/errors.hpp"

namespace nullcert {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// positive denominator, zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalizing constructor; the raw mpq_class(n, d) constructor does not
// reduce and we never want an unreduced value to escape.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q" with q > 0, or "p" when q = 1; base 10, no whitespace.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);

bool is_integral(const Rational& r);

Rational floor_rational(const Rational& r);
Rational ceil_rational(const Rational& r);

// Exact conversions; throw ContractError when the value does not fit.
std::int64_t to_int64(const Integer& z);
std::int64_t rational_to_int64(const Rational& r);

}  // namespace nullcert
