#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lascar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when integral, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// p/q in lowest terms. GMP's two-argument constructor does not reduce.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace lascar
