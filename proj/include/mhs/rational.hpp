#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mhs {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Smallest integer >= r.
Integer ceil(const Rational& r);
/// Largest integer <= r.
Integer floor(const Rational& r);

/// r - floor(r), in [0, 1).
inline Rational fractional_part(const Rational& r) {
  return r - Rational(floor(r));
}

}  // namespace mhs
