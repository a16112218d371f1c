#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace coxflat {

// Exact rational scalar used throughout. GMP keeps arithmetic canonical
// (reduced, positive denominator), which the "p/q" wire format relies on.
using Rational = mpq_class;

// Parses "p", "-p/q", etc. Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical "p/q" form; plain "p" when the denominator is 1.
std::string rational_str(const Rational& q);

// Canonicalized fraction. The two-argument mpq_class constructor does not
// reduce, and comparisons on unreduced values are unreliable; build ad-hoc
// fractions through this helper.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact n-th root, if one exists in Q.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned n);

bool is_integer(const Rational& q);

}  // namespace coxflat
