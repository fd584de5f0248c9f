#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <vector>

#include "periods/dihedral.hpp"
#include "periods/real.hpp"

namespace testing {

/// Fixed seed unless PERIODS_TEST_SEED is set.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g([] {
    const char* s = std::getenv("PERIODS_TEST_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0x70657269ull;
  }());
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random alpha >= 0 on the chords of the n-gon with total at most `total`.
inline periods::dihedral::DihedralMonomial random_monomial(int n, int total) {
  periods::dihedral::DihedralNGon g(n);
  const auto chords = periods::ngon::chords(g);
  std::map<periods::ngon::Chord, int> alpha;
  const int budget = uniform(0, total);
  for (int k = 0; k < budget; ++k) alpha[chords[uniform(0, static_cast<int>(chords.size()) - 1)]] += 1;
  return periods::dihedral::make_monomial(g, alpha);
}

/// Random rational in (0, 1) with small denominator.
inline periods::Rational random_unit_rational() {
  const int q = uniform(3, 17);
  return periods::ratio(uniform(1, q - 1), q);
}

inline periods::BigFloat big_pi(unsigned digits) {
  periods::BigFloat::default_precision(digits + 10);
  return boost::multiprecision::acos(periods::BigFloat(-1));
}

/// zeta(3) from 5/2 sum (-1)^{k+1} / (k^3 binom(2k, k)).
inline periods::BigFloat apery_zeta3(unsigned digits) {
  periods::BigFloat::default_precision(digits + 10);
  periods::BigFloat sum = 0, c = 1;  // c = binom(2k, k)
  for (int k = 1; k < 4 * static_cast<int>(digits) + 20; ++k) {
    c = c * (2 * k) * (2 * k - 1) / (periods::BigFloat(k) * k);
    periods::BigFloat term = 1 / (periods::BigFloat(k) * k * k * c);
    sum += (k % 2 ? term : -term);
  }
  return sum * 5 / 2;
}

}  // namespace testing
