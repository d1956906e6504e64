#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace trigdef {

// Exact rational scalar. Always reduced, denominator > 0 (mpq canonical form).
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

// Canonical decimal form: "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Parses the canonical form produced by to_string.
inline Rational rational_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace trigdef
