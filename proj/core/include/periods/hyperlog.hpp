#pragma once

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "periods/error.hpp"
#include "periods/real.hpp"
#include "periods/words.hpp"

namespace periods::hyperlog {

/// Iterated integral G(a_1..a_n; z) = int_0^z dt/(t - s_{a_1}) G(a_2..a_n; t), letters indexing
/// the singularity table `sigma`; letter value 0 in sigma means the point 0, regularized by
/// G(0^k; z) = log^k z / k!. z must be positive and the path [0, z] free of singularities.
template <class Real>
Real eval(const words::Word& w, const std::vector<Real>& sigma, const Real& z, int bits);

namespace detail {

template <class Real>
Real abs_value(const std::type_identity_t<Real>& v) {
  using std::abs;
  return Real(abs(v));
}

template <class Real>
Real log_value(const std::type_identity_t<Real>& v) {
  using std::log;
  return Real(log(v));
}

/// All suffix values F_i = G(u_i..u_n; z) for a word with no trailing zero letter.
template <class Real>
std::vector<Real> suffix_values(const std::vector<Real>& s, const Real& z, int bits) {
  const std::size_t n = s.size();
  Real rmin = -1;
  for (const Real& v : s)
    if (v != 0 && (rmin < 0 || abs_value<Real>(v) < rmin)) rmin = abs_value<Real>(v);
  if (rmin < 0) throw Error(ErrorCode::InvalidInput, "word of zero letters has a trailing zero");
  const int extra = 8 * static_cast<int>(n) + 16;
  Real t0 = std::min<Real>(z, rmin / 2);
  // Series at 0 with scaled coefficients c_k t0^k.
  const int N = bits + extra;
  std::vector<std::vector<Real>> coeff(n + 1, std::vector<Real>(N + 1, Real(0)));
  coeff[n][0] = 1;
  for (std::size_t idx = n; idx-- > 0;) {
    const auto& c = coeff[idx + 1];
    auto& g = coeff[idx];
    if (s[idx] == 0) {
      for (int k = 1; k <= N; ++k) g[k] = c[k] / k;
    } else {
      Real mz = t0 / s[idx];
      Real S = 0;
      for (int k = 0; k < N; ++k) {
        S = mz * (S + c[k]);
        g[k + 1] = -S / (k + 1);
      }
    }
  }
  std::vector<Real> F(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Real acc = 0;
    for (int k = N; k >= 0; --k) acc += coeff[i][k];
    F[i] = acc;
  }
  Real tc = t0;
  const int K = bits + extra;
  std::vector<std::vector<Real>> g(n + 1, std::vector<Real>(K + 1, Real(0)));
  int guard = 0;
  while (tc < z) {
    if (++guard > 100000) throw Error(ErrorCode::PrecisionUnattainable, "continuation did not reach the point");
    Real R = -1;
    for (const Real& v : s) {
      Real d = abs_value<Real>(tc - v);
      if (R < 0 || d < R) R = d;
    }
    Real h = std::min<Real>(R / 2, z - tc);
    for (auto& row : g) std::fill(row.begin(), row.end(), Real(0));
    g[n][0] = 1;
    for (std::size_t i = n; i-- > 0;) {
      Real d = tc - s[i];
      g[i][0] = F[i];
      for (int k = 0; k < K; ++k) g[i][k + 1] = (g[i + 1][k] - k * g[i][k]) / (d * (k + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Real acc = 0;
      for (int k = K; k >= 0; --k) acc = acc * h + g[i][k];
      F[i] = acc;
    }
    if (h == z - tc)
      tc = z;
    else
      tc += h;
  }
  return F;
}

}  // namespace detail

template <class Real>
Real eval(const words::Word& w, const std::vector<Real>& sigma, const Real& z, int bits) {
  if (w.empty()) return Real(1);
  if (!(z > 0)) throw Error(ErrorCode::InvalidInput, "hyperlogarithm argument must be positive");
  Real total = 0;
  Real lz = detail::log_value<Real>(z);
  for (const auto& [j, comb] : words::split_trailing(0, w)) {
    Real lj = 1;
    for (int r = 1; r <= j; ++r) lj = lj * lz / r;
    for (const auto& [u, c] : comb) {
      Real val = 1;
      if (!u.empty()) {
        std::vector<Real> s;
        for (auto a : u) s.push_back(sigma.at(a));
        val = detail::suffix_values(s, z, bits)[0];
      }
      total += to_real<Real>(c) * val * lj;
    }
  }
  return total;
}

}  // namespace periods::hyperlog
