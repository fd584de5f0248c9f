#include <doctest.h>

#include <map>
#include <set>

#include "periods/mzv.hpp"
#include "support.hpp"

using namespace periods;
using namespace periods::mzv;
using boost::multiprecision::abs;
using boost::multiprecision::pow;

namespace {

MzvCombination z(std::vector<int> c) { return MzvCombination::zeta(CompositionWord(c)); }

BigFloat value(const MzvCombination& c, unsigned digits) { return eval_big(c, digits); }

/// sum_{0 < k1 < k2} 1/(k1^a k2^b) with b >= 3, directly plus an integral tail estimate.
long double nested_sum(int a, int b, long N) {
  long double inner = 0, total = 0;
  for (long k = 1; k <= N; ++k) {
    total += inner / std::pow(static_cast<long double>(k), b);
    inner += 1.0L / std::pow(static_cast<long double>(k), a);
  }
  // inner ~ zeta(a) for large k
  return total + inner / ((b - 1) * std::pow(static_cast<long double>(N) + 0.5L, b - 1));
}

}  // namespace

TEST_CASE("text form round-trips") {
  MzvCombination c = parse("3/2*z(2) - z(1,2) + 1/3");
  CHECK(c.str() == "-z(1,2) + 3/2*z(2) + 1/3");
  CHECK(parse(c.str()) == c);
  CHECK(parse("z(3) + z(1,2)").str() == "z(3) + z(1,2)");
  CHECK(parse("0").is_zero());
  CHECK(parse("-z(2)") == z({2}) * Rational(-1));
  CHECK_THROWS(parse("z(2,1)"));
  CHECK_THROWS(parse("z(2"));
  for (int trial = 0; trial < 30; ++trial) {
    MzvCombination r(ratio(testing::uniform(-5, 5), testing::uniform(1, 4)));
    for (int k = 0; k < 4; ++k) {
      auto ws = admissible_words(testing::uniform(2, 5));
      r.add(ws[testing::uniform(0, static_cast<int>(ws.size()) - 1)], ratio(testing::uniform(-9, 9), testing::uniform(1, 6)));
    }
    CHECK(parse(r.str()) == r);
  }
}

TEST_CASE("words and compositions") {
  CHECK(composition_to_word({2}) == Word{0, 1});
  CHECK(composition_to_word({1, 2}) == Word{0, 1, 1});
  CHECK(word_to_composition(Word{0, 0, 1, 1}) == CompositionWord{1, 3});
  CHECK(!is_admissible(Word{1, 0}));
  CHECK_THROWS(composition_to_word({2, 1}));
  CHECK(admissible_words(4).size() == 4);
  CHECK(admissible_words(6).size() == 16);
}

TEST_CASE("single zeta values against closed forms") {
  const unsigned d = 60;
  BigFloat pi = testing::big_pi(d + 10);
  BigFloat tol = pow(BigFloat(10), -static_cast<int>(d));
  CHECK(abs(value(z({2}), d) - pi * pi / 6) < tol);
  CHECK(abs(value(z({4}), d) - pow(pi, 4) / 90) < tol);
  CHECK(abs(value(z({6}), d) - pow(pi, 6) / 945) < tol);
  CHECK(abs(value(z({3}), d) - testing::apery_zeta3(d + 10)) < tol);
  for (int s = 2; s <= 8; ++s)
    CHECK(abs(value(z({s}), 40) - zeta_single_euler_maclaurin(s, 40)) < pow(BigFloat(10), -38));
}

TEST_CASE("multiple zeta values against known evaluations") {
  const unsigned d = 40;
  BigFloat pi = testing::big_pi(d + 10);
  BigFloat z2 = pi * pi / 6, z4 = pow(pi, 4) / 90, z3 = testing::apery_zeta3(d + 10);
  BigFloat z5 = value(z({5}), d + 5);
  BigFloat tol = pow(BigFloat(10), -static_cast<int>(d) + 2);
  CHECK(abs(value(z({1, 2}), d) - z3) < tol);
  CHECK(abs(value(z({1, 3}), d) - z4 / 4) < tol);
  CHECK(abs(value(z({2, 2}), d) - z4 * 3 / 4) < tol);
  CHECK(abs(value(z({1, 1, 2}), d) - z4) < tol);
  CHECK(abs(value(z({1, 4}), d) - (2 * z5 - z2 * z3)) < tol);
  CHECK(abs(value(z({2, 3}), d) - (3 * z2 * z3 - z5 * 11 / 2)) < tol);
  CHECK(abs(value(z({3, 2}), d) - (z5 * 9 / 2 - 2 * z2 * z3)) < tol);
  CHECK(abs(value(z({1, 1, 1, 2}), d) - z5) < tol);
}

TEST_CASE("depth-two values against direct nested sums") {
  for (auto [a, b] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{1, 4}, std::pair{3, 3}, std::pair{2, 4}}) {
    long double direct = nested_sum(a, b, 2000000);
    double engine = eval_double(z({a, b}));
    CHECK(std::abs(static_cast<double>(direct) - engine) < 1e-9);
  }
}

TEST_CASE("eval_numeric reaches the requested digits") {
  BigFloat pi = testing::big_pi(120);
  NumericValue v = eval_numeric(z({2}), 100);
  CHECK(abs(v.value - pi * pi / 6) < pow(BigFloat(10), -100));
  CHECK(v.decimal.substr(0, 12) == "1.6449340668");
  CHECK_THROWS(eval_numeric(z({2}), 101));
  CHECK(eval_numeric(MzvCombination(Rational(1, 3)), 10).decimal.substr(0, 6) == "0.3333");
}

TEST_CASE("double shuffle relations vanish numerically") {
  for (int w = 2; w <= 7; ++w) {
    auto ds = double_shuffle_relations(w);
    auto ho = hoffman_relations(w);
    if (w >= 4) CHECK(!ds.empty());
    if (w >= 3) CHECK(!ho.empty());
    for (const auto& r : ds) CHECK(numerically_equal(r, MzvCombination(), 20));
    for (const auto& r : ho) CHECK(numerically_equal(r, MzvCombination(), 20));
  }
}

TEST_CASE("normal forms span the expected number of words") {
  // Known dimensions of weight-w MZVs: d2 = d3 = d4 = 1, d5 = 2.
  const std::map<int, std::size_t> dims{{2, 1}, {3, 1}, {4, 1}, {5, 2}};
  for (const auto& [w, d] : dims) {
    std::set<Word> survivors;
    for (const auto& word : admissible_words(w)) {
      MzvCombination r = reduce(MzvCombination::zeta(word));
      for (const auto& [u, c] : r.terms()) survivors.insert(u);
    }
    INFO("weight " << w);
    CHECK(survivors.size() == d);
  }
}

TEST_CASE("classical consequences of double shuffle") {
  CHECK(reduce(z({4}) - z({1, 3}) * Rational(4)).is_zero());
  CHECK(reduce(z({3}) - z({1, 2})).is_zero());
  // zeta(2) zeta(3) by stuffle and by shuffle agree modulo the relations.
  MzvCombination st = stuffle_product(composition_to_word({2}), composition_to_word({3}));
  MzvCombination sh = z({2}) * z({3});
  CHECK(reduce(st - sh).is_zero());
  BigFloat prod = value(z({2}), 30) * value(z({3}), 30);
  CHECK(abs(value(st, 30) - prod) < pow(BigFloat(10), -28));
  CHECK(abs(value(sh, 30) - prod) < pow(BigFloat(10), -28));
  CHECK(reduce(z({2}) * z({2}) - z({4}) * Rational(5, 2)).is_zero());
}

TEST_CASE("reduce preserves numeric values") {
  for (int trial = 0; trial < 20; ++trial) {
    MzvCombination c;
    for (int k = 0; k < 3; ++k) {
      auto ws = admissible_words(testing::uniform(2, 5));
      c.add(ws[testing::uniform(0, static_cast<int>(ws.size()) - 1)], Rational(testing::uniform(-4, 4)));
    }
    MzvCombination r = reduce(c);
    CHECK(numerically_equal(c, r, 25));
    CHECK(reduce(r) == r);
  }
}

TEST_CASE("shuffle regularization") {
  CHECK(shuffle_regularize(Word{1}).is_zero());
  CHECK(shuffle_regularize(Word{0}).is_zero());
  CHECK(shuffle_regularize(Word{0, 1}) == z({2}));
  // zeta_sh(x1 sh w) = zeta_sh(x1) zeta(w) = 0.
  for (int w = 2; w <= 5; ++w)
    for (const auto& v : admissible_words(w)) CHECK(shuffle_regularize(words::shuffle(Word{1}, v)).is_zero());
  // zeta_sh(x0 sh w) = 0 as well.
  for (const auto& v : admissible_words(4)) CHECK(shuffle_regularize(words::shuffle(Word{0}, v)).is_zero());
}

TEST_CASE("shuffle product is numerically multiplicative") {
  for (int trial = 0; trial < 15; ++trial) {
    auto wa = admissible_words(testing::uniform(2, 4)), wb = admissible_words(testing::uniform(2, 3));
    MzvCombination a = MzvCombination::zeta(wa[testing::uniform(0, static_cast<int>(wa.size()) - 1)]);
    MzvCombination b = MzvCombination::zeta(wb[testing::uniform(0, static_cast<int>(wb.size()) - 1)]);
    CHECK(abs(value(a * b, 30) - value(a, 30) * value(b, 30)) < pow(BigFloat(10), -27));
  }
}
