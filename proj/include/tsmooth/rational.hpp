#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tsmooth {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Decimal approximation for display only; never feed this back into a verdict.
double approx(const Rational& q);

/// num/den in lowest terms with a positive denominator (mpq_class(num, den) skips this).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational square(const Rational& q) { return q * q; }

}  // namespace tsmooth
