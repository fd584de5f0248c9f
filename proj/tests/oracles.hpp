#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "periods/dihedral.hpp"

namespace testing {

using periods::Rational;
using periods::dihedral::DihedralMonomial;
namespace ngon = periods::ngon;

inline bool interleave(const ngon::Chord& a, const ngon::Chord& b) {
  auto inside = [&](int v) { return a.i < v && v < a.j; };
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  return inside(b.i) != inside(b.j);
}

inline std::vector<ngon::Chord> all_pairs_nonadjacent(int n) {
  std::vector<ngon::Chord> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (!(i == 1 && j == n)) out.push_back(ngon::Chord(i, j));
  return out;
}

/// Counts (n-3)-subsets of pairwise non-interleaving chords by backtracking over all chords.
inline long brute_triangulations(int n) {
  const auto cs = all_pairs_nonadjacent(n);
  long count = 0;
  std::vector<ngon::Chord> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == n - 3) {
      ++count;
      return;
    }
    for (std::size_t k = start; k < cs.size(); ++k) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](const ngon::Chord& c) { return interleave(c, cs[k]); })) continue;
      chosen.push_back(cs[k]);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return count;
}

inline long catalan(int m) {
  long c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// Forward-mode derivative over the rationals.
struct Dual {
  Rational v;
  std::vector<Rational> d;
  Dual(Rational value = 0, std::size_t dim = 0) : v(std::move(value)), d(dim, 0) {}
  static Dual var(const Rational& value, std::size_t dim, std::size_t k) {
    Dual r(value, dim);
    r.d[k] = 1;
    return r;
  }
};
inline Dual operator+(const Dual& a, const Dual& b) {
  Dual r(a.v + b.v, std::max(a.d.size(), b.d.size()));
  for (std::size_t k = 0; k < r.d.size(); ++k) r.d[k] = (k < a.d.size() ? a.d[k] : 0) + (k < b.d.size() ? b.d[k] : 0);
  return r;
}
inline Dual operator-(const Dual& a, const Dual& b) {
  Dual nb = b;
  nb.v = -nb.v;
  for (auto& x : nb.d) x = -x;
  return a + nb;
}
inline Dual operator*(const Dual& a, const Dual& b) {
  Dual r(a.v * b.v, std::max(a.d.size(), b.d.size()));
  for (std::size_t k = 0; k < r.d.size(); ++k)
    r.d[k] = (k < a.d.size() ? a.d[k] : 0) * b.v + a.v * (k < b.d.size() ? b.d[k] : 0);
  return r;
}
inline Dual operator/(const Dual& a, const Dual& b) {
  Dual r(a.v / b.v, std::max(a.d.size(), b.d.size()));
  for (std::size_t k = 0; k < r.d.size(); ++k)
    r.d[k] = ((k < a.d.size() ? a.d[k] : 0) * b.v - a.v * (k < b.d.size() ? b.d[k] : 0)) / (b.v * b.v);
  return r;
}

inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Order of m * omega along the divisor of p by brute force: collide one block at rate eps in a
/// chart that fixes three points of the other block, map to the cubical gauge by a Moebius
/// transformation, and read off the exponent of eps from exact values at two small eps.
inline int laurent_order(const DihedralMonomial& m, const ngon::StablePartition& p) {
  const int n = m.g.n(), ell = n - 3;
  std::vector<int> B(p.block1.begin(), p.block1.end()), C(p.block2.begin(), p.block2.end());
  if (B.size() > C.size()) std::swap(B, C);
  // Parameters: 0 -> eps, then the free positions.
  auto value_at = [&](const Rational& eps) -> Rational {
    std::size_t next = 1;
    std::vector<Dual> w(n + 1);
    auto param = [&](const Rational& base) { return Dual::var(base, ell, next++); };
    for (std::size_t k = 0; k < C.size(); ++k) {
      Rational base = periods::ratio(static_cast<long>(3 + 7 * k + k * k), 5);
      w[C[k]] = k < 3 ? Dual(base, ell) : param(base);
    }
    Dual centre = param(Rational(-13, 7));
    Dual e = Dual::var(eps, ell, 0);
    for (std::size_t k = 0; k < B.size(); ++k) {
      Dual d = k == 0 ? Dual(0, ell) : k == 1 ? Dual(1, ell) : param(periods::ratio(static_cast<long>(2 + 3 * k), 4));
      w[B[k]] = centre + e * d;
    }
    if (next != static_cast<std::size_t>(ell)) throw std::logic_error("chart has the wrong dimension");
    std::vector<Dual> z(n + 1);
    for (int i = 4; i <= n; ++i) z[i] = (w[i] - w[3]) * (w[1] - w[2]) / ((w[i] - w[2]) * (w[1] - w[3]));
    std::vector<Dual> x(ell);
    for (int i = 1; i <= ell; ++i) x[i - 1] = i < ell ? z[i + 3] / z[i + 4] : z[n];
    std::vector<std::vector<Rational>> jac(ell, std::vector<Rational>(ell));
    std::vector<Rational> xv(ell);
    for (int i = 0; i < ell; ++i) {
      xv[i] = x[i].v;
      for (int k = 0; k < ell; ++k) jac[i][k] = x[i].d[k];
    }
    return monomial_to_cubical(m).rational().eval<Rational>(xv) * determinant(jac);
  };
  const Rational e1(1, 100000000), e2 = e1 * e1;
  Rational ratio = value_at(e1) / value_at(e2);
  if (ratio < 0) ratio = -ratio;
  return static_cast<int>(std::lround(std::log10(ratio.get_d()) / 8.0));
}

/// Case and order of a Kontsevich divisor restated from the classification table: S1 holds
/// {1,2,3}, {1,3}, {1,2} or {2,3} among the first three points.
inline std::pair<int, int> kontsevich_case_table(const std::vector<int>& eps, const ngon::StablePartition& p) {
  const auto& s1 = p.block1;
  const auto& s2 = p.block2;
  auto side = [&](int v) { return s1.count(v) ? 1 : 2; };
  auto rest = [&](int b, int want) {
    int count = 0;
    for (int v : (b == 1 ? s1 : s2))
      if (v >= 4 && (want < 0 || eps[v - 4] == want)) ++count;
    return count;
  };
  if (side(1) == side(2) && side(2) == side(3)) return {1, rest(3 - side(1), -1) - 2};
  if (side(1) == side(3)) return {2, -1};
  if (side(1) == side(2)) return {3, rest(side(3), 1) - 1};
  return {4, rest(side(1), 0) - 1};
}

/// u_ij for any labels: 1 for equal labels, 0 for adjacent ones.
inline periods::CubicalRational u(const periods::dihedral::DihedralNGon& g, int i, int j) {
  if (g.wrap(i) == g.wrap(j)) return 1;
  if (g.adjacent(g.wrap(i), g.wrap(j))) return 0;
  return periods::dihedral::u_to_cubical(g, ngon::make_chord(g, i, j));
}

/// Chords (in both orientations) where u_pq (1 - u_{p,q+1})(1 - u_{p+1,q+1} u_{p+1,q}) and
/// (1 - u_{p+1,q+1})(1 - u_pq u_{p,q+1}) differ.
inline int butterfly_failures(const periods::dihedral::DihedralNGon& g) {
  using periods::CubicalRational;
  int failures = 0;
  for (const auto& c : ngon::chords(g))
    for (auto [a, b] : {std::pair{c.i, c.j}, std::pair{c.j, c.i}}) {
      CubicalRational upq = u(g, a, b), upq1 = u(g, a, b + 1), up1q1 = u(g, a + 1, b + 1), up1q = u(g, a + 1, b);
      CubicalRational lhs = upq * (CubicalRational(1) - upq1) * (CubicalRational(1) - up1q1 * up1q);
      CubicalRational rhs = (CubicalRational(1) - up1q1) * (CubicalRational(1) - upq * upq1);
      if (!(lhs == rhs)) ++failures;
    }
  return failures;
}

/// Triples p < q < r, pairwise non-adjacent, where
/// (1 - u_pq)(1 - pi u_pr)(1 - pi u_qr) != pi (1 - u_pr)(1 - u_qr) with pi = prod_{p<i<q} u_ir.
inline int triangle_failures(const periods::dihedral::DihedralNGon& g, int& checked) {
  using periods::CubicalRational;
  const int n = g.n();
  int failures = 0;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 2; q <= n; ++q)
      for (int r = q + 2; r <= n; ++r) {
        if (g.adjacent(p, r)) continue;
        CubicalRational pi = 1;
        for (int i = p + 1; i < q; ++i) pi *= u(g, i, r);
        CubicalRational one(1);
        CubicalRational lhs = (one - u(g, p, q)) * (one - pi * u(g, p, r)) * (one - pi * u(g, q, r));
        CubicalRational rhs = pi * (one - u(g, p, r)) * (one - u(g, q, r));
        if (!(lhs == rhs)) ++failures;
        ++checked;
      }
  return failures;
}

}  // namespace testing
