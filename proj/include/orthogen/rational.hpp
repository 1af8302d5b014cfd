#ifndef ORTHOGEN_RATIONAL_HPP
#define ORTHOGEN_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orthogen {

// Exact rational scalar. GMP keeps every value canonical (reduced, positive
// denominator) after each arithmetic operation, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" with an optional leading sign on p. Whitespace, a zero
// denominator and anything else non-canonical in shape are rejected with
// std::invalid_argument. The result is reduced.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

// Decimal rendering for humans; never used for exact fields.
std::string to_approx_string(const Rational& value, int digits = 12);

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_positive(const Rational& v) { return sgn(v) > 0; }

// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

} // namespace orthogen

#endif
