#include <doctest.h>

#include "periods/integrator.hpp"
#include "periods/numcheck.hpp"
#include "support.hpp"

using namespace periods;
using namespace periods::numcheck;
using ngon::Chord;

namespace {

dihedral::DihedralMonomial mono(int n, std::map<Chord, int> alpha) {
  return dihedral::make_monomial(dihedral::DihedralNGon(n), alpha);
}

QuadratureReport cell_quadrature(int n, std::map<Chord, int> alpha, const Options& opt = {}) {
  return numeric_integrate(dihedral::monomial_to_cubical(mono(n, alpha)), opt);
}

const Float128 kZeta2 = Float128("1.644934066848226436472415166646025189219");
const Float128 kZeta3 = Float128("1.202056903159594285399738161511449990765");

}  // namespace

TEST_CASE("tanh-sinh reproduces low weight periods") {
  QuadratureReport q5 = cell_quadrature(5, {});
  CHECK(q5.method == Method::TanhSinhTensor);
  CHECK(q5.converged);
  CHECK(boost::multiprecision::abs(q5.value - kZeta2) < Float128("1e-9"));
  CHECK(boost::multiprecision::abs(q5.value - kZeta2) <= q5.bound);

  QuadratureReport q6 = cell_quadrature(6, {{Chord(1, 4), 1}});
  CHECK(boost::multiprecision::abs(q6.value - 2 * kZeta3) < Float128("1e-8"));
  CHECK(boost::multiprecision::abs(q6.value - 2 * kZeta3) <= q6.bound);
}

TEST_CASE("tanh-sinh on simple integrands") {
  QuadratureReport one = numeric_integrate(3, [](const Point&) { return Float128(1); });
  CHECK(boost::multiprecision::abs(one.value - 1) < Float128("1e-25"));
  // int x^2 (1-y) dx dy = 1/6
  QuadratureReport p = numeric_integrate(2, [](const Point& pt) { return pt.x[0] * pt.x[0] * pt.xc[1]; });
  CHECK(boost::multiprecision::abs(p.value - Float128(1) / 6) < Float128("1e-20"));
  // -log(x) on [0,1] integrates to 1 despite the endpoint singularity
  QuadratureReport l = numeric_integrate(1, [](const Point& pt) { return -log(pt.x[0]); });
  CHECK(boost::multiprecision::abs(l.value - 1) < Float128("1e-20"));
}

TEST_CASE("complements stay accurate near 1") {
  Point pt;
  pt.x = {Float128(1) - Float128("1e-30"), Float128(1) - Float128("2e-30")};
  pt.xc = {Float128("1e-30"), Float128("2e-30")};
  Float128 c = pt.one_minus(1, 2);
  CHECK(boost::multiprecision::abs(c - Float128("3e-30")) < Float128("1e-58"));
}

TEST_CASE("node budget") {
  Options opt;
  opt.node_budget = 200000;
  opt.target_digits = 20;
  try {
    cell_quadrature(6, {{Chord(1, 4), 1}}, opt);
    FAIL("expected the budget to run out");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(e.best().nodes > 0);
    CHECK(!e.best().converged);
    CHECK(boost::multiprecision::abs(e.best().value - 2 * kZeta3) < Float128("1e-2"));
  }
  // Not even the coarsest level fits.
  opt.node_budget = 10;
  CHECK_THROWS_AS(cell_quadrature(6, {}, opt), BudgetExceeded);
}

TEST_CASE("Monte Carlo is reproducible and within its bound") {
  auto f = [](const Point& pt) { return 1 / (pt.one_minus(1, 2) * pt.one_minus(3, 4)); };
  Options opt;
  opt.samples = 1u << 16;
  QuadratureReport a = monte_carlo(4, f, opt), b = monte_carlo(4, f, opt);
  CHECK(a.estimate == b.estimate);
  CHECK(a.method == Method::MonteCarlo);
  CHECK(a.seed == opt.seed);
  opt.seed = 7;
  QuadratureReport c = monte_carlo(4, f, opt);
  CHECK(c.estimate != a.estimate);
  // The integral factors as zeta(2)^2.
  for (const auto& q : {a, c}) CHECK(boost::multiprecision::abs(q.value - kZeta2 * kZeta2) <= q.bound);
}

TEST_CASE("Monte Carlo for a seven-point cell") {
  QuadratureReport q = cell_quadrature(7, {});
  CHECK(q.method == Method::MonteCarlo);
  VerifyReport v = compare(integrator::integrate_cell(mono(7, {})).value, q);
  CHECK(v.pass);
}

TEST_CASE("verify") {
  VerifyReport v = verify(mono(5, {{Chord(2, 4), 1}}), 10);
  CHECK(v.pass);
  CHECK(v.symbolic == mzv::MzvCombination(Rational(1)));
  CHECK(v.str().find("PASS") != std::string::npos);
  VerifyReport wrong = compare(mzv::MzvCombination::zeta(mzv::CompositionWord{2}) + mzv::MzvCombination(Rational(1, 1000)),
                               cell_quadrature(5, {}));
  CHECK(!wrong.pass);
}
