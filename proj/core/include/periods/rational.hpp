#pragma once

#include <gmpxx.h>

#include <string>

namespace periods {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p"; throws periods::Error on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// a / b in canonical form; mpq_class(a, b) does not reduce.
inline Rational ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n);
Integer binomial(int n, int k);

}  // namespace periods
