#include <doctest.h>

#include "periods/polylog.hpp"
#include "random_polylog.hpp"
#include "support.hpp"

using namespace periods;
using namespace periods::polylog;
using boost::multiprecision::abs;
using boost::multiprecision::pow;
using testing::random_expr;
using testing::random_point;

namespace {

constexpr int kCases = 60;

}  // namespace

TEST_CASE("mixed partial derivatives commute") {
  int checked = 0;
  for (int trial = 0; trial < kCases; ++trial) {
    const int ell = testing::uniform(2, 3);
    PolylogExpr e = random_expr(ell, 3);
    const int i = testing::uniform(1, ell);
    int j = testing::uniform(1, ell - 1);
    if (j >= i) ++j;
    INFO(e.str() << " d" << i << " d" << j);
    CHECK(diff(diff(e, i), j) == diff(diff(e, j), i));
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("integrate-back derivative equals the closed differential") {
  for (int trial = 0; trial < kCases; ++trial) {
    const int ell = testing::uniform(1, 3);
    PolylogExpr e = random_expr(ell, 3);
    const int k = testing::uniform(1, ell);
    INFO(e.str() << " d" << k);
    CHECK(diff(e, k) == diff_closed_form(e, k));
  }
}

TEST_CASE("primitive round trip") {
  int checked = 0, attempts = 0;
  while (checked < kCases && attempts < 10 * kCases) {
    ++attempts;
    const int ell = testing::uniform(1, 3);
    PolylogExpr e = random_expr(ell, 3, false);
    PolylogExpr p;
    try {
      p = primitive_last(e);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::PoleRequired);
      continue;
    }
    INFO(e.str());
    CHECK(diff(p, ell) == e);
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("primitive vanishes at the origin") {
  int checked = 0, attempts = 0;
  while (checked < kCases && attempts < 10 * kCases) {
    ++attempts;
    const int ell = testing::uniform(1, 3);
    PolylogExpr e = random_expr(ell, 3, false);
    PolylogExpr p;
    try {
      p = primitive_last(e);
    } catch (const Error&) {
      continue;
    }
    INFO(e.str());
    CHECK(limit_at_origin(p, ell).is_zero());
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("multiplication is a homomorphism of functions") {
  BigFloat::default_precision(45);
  for (int trial = 0; trial < kCases; ++trial) {
    const int ell = testing::uniform(1, 3);
    PolylogExpr a = random_expr(ell, 2), b = random_expr(ell, 2);
    PolylogExpr ab = multiply(a, b);
    CHECK(ab == multiply(b, a));
    auto x = random_point(ell);
    BigFloat va = a.eval<BigFloat>(x, 150), vb = b.eval<BigFloat>(x, 150), vab = ab.eval<BigFloat>(x, 150);
    BigFloat scale = std::max(BigFloat(1), BigFloat(abs(vab)));
    INFO(a.str() << " * " << b.str());
    CHECK(abs(vab - va * vb) <= pow(BigFloat(10), -20) * scale);
  }
}
