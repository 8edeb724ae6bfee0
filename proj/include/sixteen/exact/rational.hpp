#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sixteen::exact {

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every operation, which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational from_int_like(const Rational&, std::int64_t v) { return Rational(static_cast<long>(v)); }

Rational parse_rational(const std::string& text);

/// True when q is the square of a rational number (0 included).
bool is_rational_square(const Rational& q);

/// Nonnegative square root of a rational square; throws NotASquare otherwise.
Rational rational_sqrt(const Rational& q);

} // namespace sixteen::exact
