#include <doctest.h>

#include "periods/integrator.hpp"
#include "support.hpp"

using namespace periods;
using namespace periods::integrator;
using dihedral::make_monomial;
using mzv::MzvCombination;
using ngon::Chord;

namespace {

MzvCombination z(std::vector<int> c) { return MzvCombination::zeta(mzv::CompositionWord(c)); }

MzvCombination cell(int n, std::map<Chord, int> alpha) {
  return integrate_cell(make_monomial(dihedral::DihedralNGon(n), alpha)).value;
}

bool same(const MzvCombination& a, const MzvCombination& b) { return mzv::reduce(a - b).is_zero(); }

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// I5 with alpha24 = h, alpha35 = i, alpha14 = j, alpha25 = k, alpha13 = l.
MzvCombination i5(int h, int i, int j, int k, int l) {
  return cell(5, {{Chord(2, 4), h}, {Chord(3, 5), i}, {Chord(1, 4), j}, {Chord(2, 5), k}, {Chord(1, 3), l}});
}

}  // namespace

TEST_CASE("golden periods") {
  CHECK(cell(4, {}) == MzvCombination(Rational(1)));
  CHECK(cell(5, {}) == z({2}));
  CHECK(same(cell(6, {{Chord(1, 4), 1}}), z({3}) + z({1, 2})));
  CHECK(same(cell(6, {{Chord(2, 5), 1}, {Chord(1, 4), 1}}), z({2})));
  CHECK(same(cell(6, {}), z({2}) * Rational(2)));
  CHECK(same(cell(7, {}), z({4}) * Rational(27, 4)));
  CHECK(same(cell(8, {}), z({4}) * Rational(16)));
}

TEST_CASE("results are exact and of bounded weight") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = testing::uniform(5, 7);
    auto m = testing::random_monomial(n, 4);
    PeriodResult r = integrate_cell(m);
    CHECK(r.weight_bound == n - 3);
    for (const auto& [w, c] : r.value.terms()) CHECK(static_cast<int>(w.size()) <= n - 3);
    CHECK(!r.trace.empty());
  }
}

TEST_CASE("beta function") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      Rational expect = ratio(factorial(a) * factorial(b), factorial(a + b + 1));
      CHECK(integrate_beta(a, b) == expect);
    }
}

TEST_CASE("Dixon identity") {
  int checked = 0;
  for (int h = 0; h <= 2; ++h)
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k)
          for (int l = 0; l <= 2; ++l) {
            const int j2 = k + l - i, k2 = i + j - l;
            if (j2 < 0 || k2 < 0) continue;
            MzvCombination lhs = i5(h, i, j, k, l) * ratio(1, factorial(j) * factorial(k));
            MzvCombination rhs = i5(h, i, j2, k2, l) * ratio(1, factorial(j2) * factorial(k2));
            INFO(h << i << j << k << l);
            CHECK(mzv::numerically_equal(lhs, rhs, 30));
            ++checked;
          }
  CHECK(checked > 10);
}

TEST_CASE("Kontsevich family") {
  for (int ell = 2; ell <= 4; ++ell)
    for (int mask = 0; mask < (1 << (ell - 2)); ++mask) {
      std::vector<int> eps(ell, 0);
      eps[0] = 1;
      for (int b = 0; b < ell - 2; ++b) eps[b + 1] = (mask >> b) & 1;
      PeriodResult r = integrate_kontsevich(eps);
      INFO("eps size " << ell << " mask " << mask << ": " << r.value.str());
      CHECK(same(r.value, kontsevich_closed_form(eps)));
    }
  CHECK(kontsevich_closed_form({1, 0}) == z({2}) * Rational(-1));
  CHECK(kontsevich_closed_form({1, 1, 0}) == z({1, 2}) * Rational(-1));
  CHECK_THROWS_AS(integrate_kontsevich({0, 1}), Error);
  CHECK_THROWS_AS(integrate_kontsevich({1, 1}), Error);
}

TEST_CASE("dihedral invariance") {
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 5 + trial % 2;
    auto m = testing::random_monomial(n, 6);
    MzvCombination base = mzv::reduce(integrate_cell(m).value);
    for (const auto& s : ngon::dihedral_group(m.g)) CHECK(mzv::reduce(integrate_cell(m.transformed(s)).value) == base);
  }
}

TEST_CASE("Taylor coefficients of the multi-beta function") {
  dihedral::DihedralNGon g4(4);
  auto t = taylor_multibeta(make_monomial(g4, {}), 2);
  MultiIndex a1{{Chord(1, 3), 1}}, a2{{Chord(1, 3), 2}}, ab{{Chord(1, 3), 1}, {Chord(2, 4), 1}};
  CHECK(t.at(MultiIndex{}) == MzvCombination(Rational(1)));
  CHECK(t.at(a1) == MzvCombination(Rational(-1)));
  CHECK(t.at(a2) == MzvCombination(Rational(2)));
  CHECK(same(t.at(ab), MzvCombination(Rational(2)) - z({2})));

  // First-order coefficients are the integral of log u against the form.
  dihedral::DihedralNGon g5(5);
  auto m = make_monomial(g5, {{Chord(1, 3), 1}});
  auto t5 = taylor_multibeta(m, 1);
  for (const auto& c : ngon::chords(g5)) {
    polylog::PolylogExpr e = log_u(g5, c);
    polylog::PolylogExpr base = polylog::PolylogExpr::constant(2, dihedral::u_to_cubical(g5, Chord(1, 3)));
    MzvCombination direct = integrate_polylog(polylog::multiply(e, base), 5).value;
    CHECK(same(t5.at(MultiIndex{{c, 1}}), direct));
  }
  // int int log(x) / (1 - xy) = -sum 1/(k+1)^3, and alpha = 0 is dihedrally symmetric
  auto t0 = taylor_multibeta(make_monomial(g5, {}), 1);
  for (const auto& c : ngon::chords(g5)) CHECK(same(t0.at(MultiIndex{{c, 1}}), z({3}) * Rational(-1)));
}

TEST_CASE("integrating a polylogarithm against the form") {
  polylog::PolylogExpr one = polylog::PolylogExpr::constant(2, 1);
  CHECK(integrate_polylog(one, 5).value == z({2}));
}

TEST_CASE("invalid and divergent input") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalDivergence;
  };
  CHECK(code_of([] { cell(9, {}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { cell(5, {{Chord(1, 3), 13}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { cell(5, {{Chord(1, 3), -1}}); }) == ErrorCode::NonConvergent);
  CHECK(code_of([] { integrate_beta(-1, 0); }) == ErrorCode::InvalidInput);
}
