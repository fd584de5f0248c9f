#pragma once

#include "periods/polylog.hpp"
#include "support.hpp"

namespace testing {

using periods::BigFloat;
using periods::CubicalRational;
using periods::Rational;
using periods::polylog::Letter;
using periods::polylog::PolylogExpr;
using periods::polylog::Word;
using periods::polylog::multiply;
using periods::to_real;

/// Coefficient r * x_v^p * (1 - x_i...x_j)^-e; no pole in x_ell unless allow_last_pole.
inline CubicalRational random_coefficient(int ell, bool allow_last_pole) {
  CubicalRational c(periods::ratio(testing::uniform(-3, 3) * 2 + 1, testing::uniform(1, 3)));
  if (testing::uniform(0, 1)) {
    const int v = testing::uniform(1, ell);
    int p = testing::uniform(0, 1) ? 1 : -1;
    if (v == ell && !allow_last_pole) p = 1;
    c *= CubicalRational::x(v, p);
  }
  if (testing::uniform(0, 2)) {
    const int j = testing::uniform(1, ell);
    const int i = testing::uniform(1, j);
    c *= CubicalRational::atom(i, j, -testing::uniform(1, 2));
  }
  return c;
}

inline Word random_word(int slot, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(testing::uniform(0, slot)));
  return w;
}

inline PolylogExpr random_expr(int ell, int max_weight, bool allow_last_pole = true) {
  PolylogExpr e(ell);
  for (int t = testing::uniform(1, 3); t > 0; --t) {
    PolylogExpr term = PolylogExpr::constant(ell, random_coefficient(ell, allow_last_pole));
    int budget = testing::uniform(0, max_weight);
    for (int k = 1; k <= ell && budget > 0; ++k) {
      const int len = testing::uniform(0, budget);
      if (len == 0) continue;
      budget -= len;
      term = multiply(term, PolylogExpr::word(ell, k, random_word(k, len)));
    }
    e += term;
  }
  return e;
}

inline std::vector<BigFloat> random_point(int ell) {
  std::vector<BigFloat> x;
  for (int i = 0; i < ell; ++i) x.push_back(to_real<BigFloat>(testing::random_unit_rational()));
  return x;
}

}  // namespace testing
