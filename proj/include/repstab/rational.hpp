#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace repstab {

/// Exact rational over arbitrary-precision integers, always canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", including integers ("3/1").
std::string to_fraction_string(const Rational& value);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form (mpq_class(num, den) alone is not reduced).
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace repstab
