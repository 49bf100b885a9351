#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace threepv {

/// Exact rational scalar over arbitrary-precision integers.
using Rational = mpq_class;

/// Serializes as "p/q" with q > 0 (integers carry "/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// n/d in canonical form; mpq_class(n, d) alone does not canonicalize.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational delta(long a, long b) { return a == b ? Rational(1) : Rational(0); }

}  // namespace threepv
