#include <doctest.h>

#include <cmath>

#include "periods/dihedral.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace periods;
using namespace periods::dihedral;
using ngon::chords;

using testing::u;

namespace {

/// Marked points z_1 = 1, z_2 = infinity (nullopt), z_3 = 0, z_{i+3} = x_i...x_l.
std::vector<std::optional<Rational>> marked_points(int n, const std::vector<Rational>& x) {
  std::vector<std::optional<Rational>> z(n + 1);
  z[1] = Rational(1);
  z[3] = Rational(0);
  for (int i = 1; i <= n - 3; ++i) {
    Rational p = 1;
    for (int v = i; v <= n - 3; ++v) p *= x[v - 1];
    z[i + 3] = p;
  }
  return z;
}

/// [a b | c d] = (z_a - z_c)(z_b - z_d) / ((z_a - z_d)(z_b - z_c)); factors with infinity cancel.
Rational cross_ratio(const std::vector<std::optional<Rational>>& z, int a, int b, int c, int d) {
  auto diff = [&](int p, int q) { return (!z[p] || !z[q]) ? Rational(1) : Rational(*z[p] - *z[q]); };
  return diff(a, c) * diff(b, d) / (diff(a, d) * diff(b, c));
}

std::vector<Rational> random_point(int ell) {
  std::vector<Rational> x;
  for (int i = 0; i < ell; ++i) x.push_back(testing::random_unit_rational());
  return x;
}

}  // namespace

TEST_CASE("dihedral coordinates in cubical coordinates") {
  DihedralNGon g5(5), g6(6);
  CHECK(u_to_cubical(g5, ngon::Chord(1, 3)) == CubicalRational(1) - CubicalRational::x(1) * CubicalRational::x(2));
  CHECK(u_to_cubical(g5, ngon::Chord(2, 4)) == CubicalRational::x(1));
  CHECK(u_to_cubical(g6, ngon::Chord(3, 6)) == CubicalRational::atom(1, 2) * CubicalRational::atom(1, 3, -1));
  CHECK(u_to_cubical(g6, ngon::Chord(1, 4)) == CubicalRational::atom(2, 3) * CubicalRational::atom(1, 3, -1));
}

TEST_CASE("u_ij matches the cross-ratio [i i+1 | j+1 j] at random points") {
  for (int n = 4; n <= 8; ++n) {
    DihedralNGon g(n);
    for (int trial = 0; trial < 5; ++trial) {
      auto x = random_point(n - 3);
      auto z = marked_points(n, x);
      for (const auto& c : chords(g)) {
        Rational expect = cross_ratio(z, c.i, g.wrap(c.i + 1), g.wrap(c.j + 1), c.j);
        CHECK(u_to_cubical(g, c).eval<Rational>(x) == expect);
      }
    }
  }
}

TEST_CASE("complete crossing relation for every chord") {
  for (int n = 4; n <= 7; ++n) {
    DihedralNGon g(n);
    for (const auto& c : chords(g)) {
      ngon::ChordSet cross = ngon::crossing_set(c, g);
      CHECK(verify_complete_crossing_relation(g, {c}, cross));
      CubicalRational prod = 1;
      for (const auto& d : cross) prod *= u_to_cubical(g, d);
      CHECK(u_to_cubical(g, c) + prod == CubicalRational(1));
    }
  }
  DihedralNGon g5(5), g6(6);
  CHECK(verify_complete_crossing_relation(g5, {ngon::Chord(1, 3)}, {ngon::Chord(2, 4), ngon::Chord(2, 5)}));
  CHECK(verify_complete_crossing_relation(
      g6, {ngon::Chord(2, 5)}, {ngon::Chord(1, 3), ngon::Chord(4, 6), ngon::Chord(1, 4), ngon::Chord(3, 6)}));
  CHECK_THROWS(verify_complete_crossing_relation(g5, {ngon::Chord(1, 3)}, {ngon::Chord(1, 4)}));
}

TEST_CASE("butterfly relation") {
  for (int n = 4; n <= 7; ++n) CHECK(testing::butterfly_failures(DihedralNGon(n)) == 0);
}

TEST_CASE("triangle relation") {
  int checked = 0;
  for (int n = 6; n <= 7; ++n) CHECK(testing::triangle_failures(DihedralNGon(n), checked) == 0);
  CHECK(checked > 0);
}

TEST_CASE("monomial_to_cubical examples") {
  DihedralNGon g5(5), g6(6);
  CubicalIntegrand zero = monomial_to_cubical(make_monomial(g6, {}));
  CHECK(zero.a == std::vector<int>{0, 0, 0});
  CHECK(zero.b == std::vector<int>{0, 0, 0});
  CHECK(zero.c == std::map<std::pair<int, int>, int>{{{1, 2}, -1}, {{1, 3}, 0}, {{2, 3}, -1}});
  CubicalIntegrand a24 = monomial_to_cubical(make_monomial(g5, {{ngon::Chord(2, 4), 1}}));
  CHECK(a24.a == std::vector<int>{1, 0});
  CHECK(a24.c.at({1, 2}) == -1);
  // u14 = (1 - yz)/(1 - xyz) for n = 6.
  CubicalIntegrand a14 = monomial_to_cubical(make_monomial(g6, {{ngon::Chord(1, 4), 1}}));
  CHECK(a14.rational() == CubicalRational::atom(1, 2, -1) * CubicalRational::atom(1, 3, -1));
}

TEST_CASE("monomial_to_cubical is the product formula and round-trips") {
  for (int n = 4; n <= 8; ++n) {
    DihedralNGon g(n);
    for (int trial = 0; trial < 10; ++trial) {
      DihedralMonomial m = testing::random_monomial(n, 8);
      if (trial % 2)
        for (auto& [c, e] : m.alpha) e = -e;
      CubicalRational prod = omega_atoms(g).to_rational();
      for (const auto& [c, e] : m.alpha) prod *= u_to_cubical(g, c).pow(e);
      CubicalIntegrand ci = monomial_to_cubical(m);
      CHECK(ci.rational() == prod);
      CHECK(cubical_to_monomial(g, ci) == m);
    }
  }
}

TEST_CASE("convergence check") {
  DihedralNGon g(6);
  CHECK(convergence_check(make_monomial(g, {})));
  CHECK(convergence_check(make_monomial(g, {{ngon::Chord(1, 4), 2}})));
  CHECK(!convergence_check(make_monomial(g, {{ngon::Chord(1, 4), -1}})));
}

TEST_CASE("ord_form agrees with the Laurent oracle for every divisor, n = 5 and 6") {
  for (int n = 5; n <= 6; ++n) {
    DihedralNGon g(n);
    std::vector<DihedralMonomial> family{make_monomial(g, {})};
    for (int k = 0; k < 3; ++k) family.push_back(testing::random_monomial(n, 5));
    DihedralMonomial neg = testing::random_monomial(n, 4);
    for (auto& [c, e] : neg.alpha) e = -e;
    family.push_back(neg);
    const auto parts = ngon::enumerate_stable_partitions(g);
    CHECK(parts.size() == (n == 5 ? 10u : 25u));
    for (const auto& m : family)
      for (const auto& p : parts) {
        INFO("partition " << p.str());
        CHECK(ord_form(m, p) == testing::laurent_order(m, p));
      }
  }
}

TEST_CASE("ord of the form vanishes on finite-distance divisors") {
  for (int n = 4; n <= 8; ++n) {
    DihedralNGon g(n);
    DihedralMonomial zero = make_monomial(g, {});
    for (const auto& c : chords(g)) {
      auto p = ngon::stable_partition_of_chord(g, c);
      CHECK(ord_form(zero, p) == 0);
      CHECK(ord_u(g, p, c) == 1);
      DihedralMonomial m = testing::random_monomial(n, 6);
      CHECK(ord_form(m, p) == m.exponent(c));
    }
  }
  DihedralNGon g5(5);
  ngon::StablePartition p = ngon::make_partition(g5, {1, 3});
  CHECK(ord_form(make_monomial(g5, {}), p) == -1);
}

TEST_CASE("Kontsevich monomials") {
  DihedralNGon g5(5);
  CHECK(kontsevich_to_monomial({1, 0}).monomial == make_monomial(g5, {}));
  // sign * cubical integrand == prod_i 1/(eps_i - t_i) * dt/dx with t_i = x_i...x_l.
  for (int ell = 2; ell <= 5; ++ell)
    for (int bits = 0; bits < (1 << ell); ++bits) {
      std::vector<int> eps(ell);
      for (int i = 0; i < ell; ++i) eps[i] = (bits >> i) & 1;
      KontsevichMonomial km = kontsevich_to_monomial(eps);
      CHECK(convergence_check(km.monomial) == (eps.front() == 1 && eps.back() == 0));
      auto x = random_point(ell);
      Rational expect = 1;
      for (int i = 1; i <= ell; ++i) {
        Rational t = 1, jac = 1;
        for (int v = i; v <= ell; ++v) t *= x[v - 1];
        for (int v = i + 1; v <= ell; ++v) jac *= x[v - 1];
        expect *= jac / (Rational(eps[i - 1]) - t);
      }
      CHECK(monomial_to_cubical(km.monomial).rational().eval<Rational>(x) * Rational(km.sign) == expect);
    }
}

TEST_CASE("Kontsevich divisor classification matches ord_form and the case table") {
  for (int ell = 2; ell <= 4; ++ell)
    for (int bits = 0; bits < (1 << ell); ++bits) {
      std::vector<int> eps(ell);
      for (int i = 0; i < ell; ++i) eps[i] = (bits >> i) & 1;
      KontsevichMonomial km = kontsevich_to_monomial(eps);
      auto divisors = kontsevich_divisors(eps);
      CHECK(divisors.size() == ngon::enumerate_stable_partitions(km.monomial.g).size());
      for (const auto& d : divisors) {
        CHECK(d.order == ord_form(km.monomial, d.partition));
        auto [expected_kind, expected_order] = testing::kontsevich_case_table(eps, d.partition);
        CHECK(static_cast<int>(d.kind) == expected_kind);
        CHECK(d.order == expected_order);
      }
      for (const auto& d : kontsevich_singular_divisors(eps)) CHECK(d.order < 0);
    }
}
