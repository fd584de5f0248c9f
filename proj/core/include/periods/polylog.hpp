#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periods/cubical_rational.hpp"
#include "periods/hyperlog.hpp"
#include "periods/mzv.hpp"
#include "periods/words.hpp"

namespace periods::polylog {

using words::Letter;
using words::Word;

/// Slot-k letters: 0 is dlog x_k, i in 1..k is dlog(1 - x_i...x_k). As a function of
/// t = x_k the letter i has the singularity sigma_i = 1/(x_i...x_{k-1}); sigma_k = 1.
constexpr Letter kLogX = 0;

struct FiberLetter {
  int slot = 1;
  /// 0 for LOG_X, otherwise LOG_ONE_MINUS(i).
  int i = 0;
  std::string str() const;
};

/// Maximum number of cubical variables and of total word weight.
constexpr int kMaxEll = 5;
constexpr int kMaxWeight = 8;

/// One basis element: an MZV word (empty for 1) and one fiber word per slot.
struct TermKey {
  Word zeta;
  std::vector<Word> slots;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  int weight() const;
};

/// Sum of CubicalRational * zeta(word) * prod_k G(w_k; x_k), where slot words are realized as
/// hyperlogarithms with trivial constants at x = 0.
class PolylogExpr {
 public:
  explicit PolylogExpr(int ell = 0);
  static PolylogExpr constant(int ell, const CubicalRational& r);
  static PolylogExpr word(int ell, int slot, const Word& w, const CubicalRational& coeff = 1);
  static PolylogExpr from_mzv(int ell, const mzv::MzvCombination& c);

  int ell() const { return ell_; }
  const std::map<TermKey, CubicalRational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total word length, MZV weight included.
  int weight() const;

  void add(const TermKey& key, const CubicalRational& c);
  PolylogExpr operator+(const PolylogExpr& o) const;
  PolylogExpr operator-(const PolylogExpr& o) const;
  PolylogExpr operator-() const;
  PolylogExpr operator*(const CubicalRational& c) const;
  PolylogExpr& operator+=(const PolylogExpr& o);
  friend bool operator==(const PolylogExpr&, const PolylogExpr&) = default;

  /// Same function viewed with a different number of variables; dropped slots must be empty.
  PolylogExpr with_ell(int ell) const;
  /// Scalar value when no slot words and no variables remain.
  mzv::MzvCombination to_mzv() const;
  /// Reduces the MZV scalars with mzv::reduce and merges equal keys.
  PolylogExpr reduce_scalars() const;

  template <class Real>
  Real eval(const std::vector<Real>& x, int bits) const;

  std::string str() const;

 private:
  int ell_;
  std::map<TermKey, CubicalRational> terms_;
};

PolylogExpr multiply(const PolylogExpr& a, const PolylogExpr& b);

/// Partial derivative in x_k; higher slots use the integrate-back recursion.
PolylogExpr diff(const PolylogExpr& e, int k);
/// Same derivative through the closed differential of hyperlogarithms.
PolylogExpr diff_closed_form(const PolylogExpr& e, int k);

/// Primitive in the last variable x_ell with regularized value 0 at x_ell = 0.
PolylogExpr primitive_last(const PolylogExpr& e);

/// Regularized value at x_ell = 1 in the canonical basis of x_1..x_{ell-1}.
PolylogExpr restrict_last_to_one(const PolylogExpr& e);

/// Regularized limit x_k -> 0+; the slot count is unchanged and the result is free of x_k.
PolylogExpr limit_at_origin(const PolylogExpr& e, int k);

/// Value at a point of (0,1)^ell to within 10^-digits.
std::string eval_numeric(const PolylogExpr& e, const std::vector<Rational>& point, int digits);

/// log of the difference of two singularities of slot j (letters 0..j, or kArgument for x_j),
/// as an integer combination of log x_v and log(1 - x_a...x_b), up to an additive constant.
constexpr int kArgument = -1;
struct LogCombination {
  std::map<int, int> x;
  std::map<std::pair<int, int>, int> atoms;
  bool is_zero() const { return x.empty() && atoms.empty(); }
  CubicalRational derivative(int k) const;
  AtomProduct exponentiated() const;
};
LogCombination log_difference(int slot, int a, int b);
/// sigma_a - sigma_b as a CubicalRational (kArgument is x_slot).
CubicalRational singularity_difference(int slot, int a, int b);

/// G(v; 1) for a word over the slot-(m+1) alphabet, as an expression in x_1..x_m.
PolylogExpr regularized_value_at_one(int m, const Word& v);

/// Caps the term count of intermediate expressions (PERIODS_TERM_BUDGET, default 2000000).
std::size_t term_budget();
void check_budget(const PolylogExpr& e);

/// Sigma table of slot k at a numeric point.
template <class Real>
std::vector<Real> slot_sigma(int k, const std::vector<Real>& x) {
  std::vector<Real> s(k + 1);
  s[0] = 0;
  for (int i = 1; i <= k; ++i) {
    Real m = 1;
    for (int v = i; v < k; ++v) m *= x[v - 1];
    s[i] = Real(1) / m;
  }
  return s;
}

template <class Real>
Real PolylogExpr::eval(const std::vector<Real>& x, int bits) const {
  Real total = 0;
  std::vector<std::vector<Real>> sigma;
  for (int k = 1; k <= ell_; ++k) sigma.push_back(slot_sigma<Real>(k, x));
  const unsigned digits = static_cast<unsigned>(bits / 3.3) + 5;
  for (const auto& [key, c] : terms_) {
    Real t = c.template eval<Real>(x);
    if (!key.zeta.empty()) t *= from_big<Real>(mzv::zeta_value(key.zeta, digits));
    for (int k = 1; k <= ell_; ++k)
      if (!key.slots[k - 1].empty()) t *= hyperlog::eval<Real>(key.slots[k - 1], sigma[k - 1], x[k - 1], bits);
    total += t;
  }
  return total;
}

}  // namespace periods::polylog
