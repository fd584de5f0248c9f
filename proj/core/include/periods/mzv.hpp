#pragma once

#include <map>
#include <string>
#include <vector>

#include "periods/rational.hpp"
#include "periods/real.hpp"
#include "periods/words.hpp"

namespace periods::mzv {

using words::CompositionWord;
using words::Word;

/// Letters of MZV words.
constexpr words::Letter X0 = 0;
constexpr words::Letter X1 = 1;

bool is_admissible(const Word& w);
/// x0^{n_r-1} x1 ... x0^{n_1-1} x1 -> (n_1, ..., n_r).
CompositionWord word_to_composition(const Word& w);
Word composition_to_word(const CompositionWord& c);

/// Rational combination of admissible MZVs plus a rational constant.
class MzvCombination {
 public:
  MzvCombination() = default;
  MzvCombination(const Rational& c) : constant_(c) {}  // NOLINT
  static MzvCombination zeta(const Word& admissible, const Rational& c = 1);
  static MzvCombination zeta(const CompositionWord& c, const Rational& coeff = 1);

  const std::map<Word, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }
  /// Largest word length (0 for a pure constant).
  int weight() const;

  MzvCombination operator+(const MzvCombination& o) const;
  MzvCombination operator-(const MzvCombination& o) const;
  MzvCombination operator-() const { return *this * Rational(-1); }
  MzvCombination operator*(const Rational& c) const;
  /// Product through the shuffle of words.
  MzvCombination operator*(const MzvCombination& o) const;
  MzvCombination& operator+=(const MzvCombination& o) { return *this = *this + o; }
  void add(const Word& w, const Rational& c);
  friend bool operator==(const MzvCombination&, const MzvCombination&) = default;

  /// "3/2*z(2) - z(1,2)"; weight descending, depth ascending, then lexicographic; constant last.
  std::string str() const;

 private:
  std::map<Word, Rational> terms_;
  Rational constant_ = 0;
};

/// Parses the text form produced by str().
MzvCombination parse(const std::string& text);

/// zeta_sh of an arbitrary word over {x0, x1}, with zeta_sh(x0) = zeta_sh(x1) = 0.
MzvCombination shuffle_regularize(const Word& w);
MzvCombination shuffle_regularize(const words::WordCombination& c);

/// zeta(u) zeta(v) through the stuffle of compositions.
MzvCombination stuffle_product(const Word& u, const Word& v);

/// zeta_sh(u sh v) - zeta(u * v) for admissible u, v of total weight w; zero relations dropped.
std::vector<MzvCombination> double_shuffle_relations(int weight);
/// zeta(x1 sh v - x1 * v) = 0 for admissible v of weight w - 1.
std::vector<MzvCombination> hoffman_relations(int weight);
/// Normal form modulo the double shuffle and Hoffman relations, weight <= max_weight.
/// Higher-depth words are eliminated first.
MzvCombination reduce(const MzvCombination& c, int max_weight = 5);

/// Admissible words of a given weight in lexicographic order.
std::vector<Word> admissible_words(int weight);

// Numerics.

BigFloat zeta_value(const Word& admissible, unsigned digits);
BigFloat eval_big(const MzvCombination& c, unsigned digits);
double eval_double(const MzvCombination& c);

struct NumericValue {
  std::string decimal;
  /// Absolute error bound, as a decimal string.
  std::string error_bound;
  BigFloat value;
};

/// Value to within 10^-digits; digits <= 100.
NumericValue eval_numeric(const MzvCombination& c, int digits);
/// Depth-one zeta(s) by direct summation with an Euler-Maclaurin tail.
BigFloat zeta_single_euler_maclaurin(int s, unsigned digits);
/// |a - b| < 10^-digits numerically.
bool numerically_equal(const MzvCombination& a, const MzvCombination& b, int digits);

}  // namespace periods::mzv
