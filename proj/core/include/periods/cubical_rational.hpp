#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periods/rational.hpp"
#include "periods/real.hpp"

namespace periods {

/// Packed exponent vector for x_1..x_8, one byte each; x_1 occupies the high byte,
/// so integer comparison is the lexicographic monomial order.
using Monomial = std::uint64_t;
constexpr int kMaxVars = 8;

inline int exponent(Monomial m, int v) { return static_cast<int>((m >> (8 * (kMaxVars - v))) & 0xffu); }
inline Monomial var_power(int v, int e) { return static_cast<Monomial>(e) << (8 * (kMaxVars - v)); }
/// x_i x_{i+1} ... x_j
Monomial segment(int i, int j);
bool divides(Monomial a, Monomial b);
Monomial mono_min(Monomial a, Monomial b);
Monomial mono_max(Monomial a, Monomial b);
std::string mono_str(Monomial m);

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(const Rational& c);
  static Poly monomial(Monomial m, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly mul_monomial(Monomial m) const;
  /// Divides every term by m; m must divide all of them.
  Poly div_monomial(Monomial m) const;
  Poly pow(int e) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Greatest common monomial divisor of all terms.
  Monomial monomial_content() const;
  int degree(int v) const;
  int min_degree(int v) const;
  int max_var() const;
  /// Coefficient of x_v^d, as a polynomial without x_v.
  Poly coefficient(int v, int d) const;
  Poly derivative(int v) const;
  /// Substitutes x_v = c.
  Poly substitute(int v, const Rational& c) const;
  /// Substitutes x_v = p.
  Poly compose(int v, const Poly& p) const;
  /// Exact quotient by (1 - m) if it divides.
  bool divide_one_minus(Monomial m, Poly& quotient) const;

  template <class Real>
  Real eval(const std::vector<Real>& x) const;

  std::string str() const;

 private:
  static Poly from_sorted(std::vector<Term> t);
  std::vector<Term> terms_;
};

/// Exact rational function N / (x^d * prod (1 - x_i...x_j)^e) with canonical
/// cancellation, so structural equality is equality of functions.
class CubicalRational {
 public:
  using AtomKey = std::pair<int, int>;

  CubicalRational() = default;
  CubicalRational(const Rational& c);  // NOLINT
  CubicalRational(int c) : CubicalRational(Rational(c)) {}  // NOLINT
  explicit CubicalRational(Poly numerator);
  CubicalRational(Poly numerator, Monomial xden, std::map<AtomKey, int> atoms);

  static CubicalRational x(int v, int power = 1);
  /// (1 - x_i...x_j)^e for any integer e.
  static CubicalRational atom(int i, int j, int e = 1);
  static CubicalRational monomial(Monomial m, const Rational& c = 1);

  const Poly& numerator() const { return num_; }
  Monomial xden() const { return xden_; }
  const std::map<AtomKey, int>& atoms() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  Rational constant_value() const;
  int max_var() const;
  bool depends_on(int v) const;

  CubicalRational operator+(const CubicalRational& o) const;
  CubicalRational operator-(const CubicalRational& o) const;
  CubicalRational operator-() const;
  CubicalRational operator*(const CubicalRational& o) const;
  CubicalRational operator*(const Rational& c) const;
  CubicalRational& operator+=(const CubicalRational& o) { return *this = *this + o; }
  CubicalRational& operator-=(const CubicalRational& o) { return *this = *this - o; }
  CubicalRational& operator*=(const CubicalRational& o) { return *this = *this * o; }
  CubicalRational pow(int e) const;
  /// Inverse; the numerator must factor as a monomial times atoms.
  CubicalRational inverse() const;
  friend bool operator==(const CubicalRational&, const CubicalRational&) = default;

  CubicalRational derivative(int v) const;
  /// x_v = 1 for the highest variable v; atoms (i,v) become (i,v-1). Throws on a pole.
  CubicalRational set_last_one(int v) const;
  /// x_v = 0; throws on a pole.
  CubicalRational set_zero(int v) const;
  /// Order of the pole at x_v = 0 (positive means pole).
  int pole_order_zero(int v) const { return exponent(xden_, v); }
  int atom_exponent(int i, int j) const;

  /// Laurent coefficients in x_v at 0, orders lo..hi.
  std::vector<CubicalRational> laurent_zero(int v, int lo, int hi) const;
  /// Laurent coefficients in s = 1 - x_v at s = 0 (v highest variable), orders lo..hi.
  std::vector<CubicalRational> laurent_one(int v, int lo, int hi) const;
  /// Laurent coefficients in u = 1 - m_i x_v at u = 0, m_i = x_i...x_{v-1}.
  std::vector<CubicalRational> laurent_atom(int v, int i, int lo, int hi) const;

  template <class Real>
  Real eval(const std::vector<Real>& x) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Monomial xden_ = 0;
  std::map<AtomKey, int> den_;
};

CubicalRational operator*(const Rational& c, const CubicalRational& r);

/// Partial fractions in the highest variable t = x_v:
/// R = sum_r zero[r] t^-r + sum_i sum_r atom[i][r] (1 - m_i t)^-r + sum_d poly[d] t^d,
/// where m_i = x_i...x_{v-1}; every coefficient is free of x_v.
struct PartialFractions {
  std::map<int, CubicalRational> zero;
  std::map<int, std::map<int, CubicalRational>> atom;
  std::map<int, CubicalRational> poly;
};
PartialFractions partial_fractions(const CubicalRational& r, int v);

/// Multiplicative form c * prod x_v^a_v * prod (1 - x_i...x_j)^e with integer exponents.
struct AtomProduct {
  Rational coeff = 1;
  std::map<int, int> x;
  std::map<CubicalRational::AtomKey, int> atoms;

  AtomProduct operator*(const AtomProduct& o) const;
  AtomProduct pow(int e) const;
  CubicalRational to_rational() const;
  friend bool operator==(const AtomProduct&, const AtomProduct&) = default;
  std::string str() const;
};

template <class Real>
Real Poly::eval(const std::vector<Real>& x) const {
  Real total = 0;
  for (const auto& [m, c] : terms_) {
    Real t = to_real<Real>(c);
    for (int v = 1; v <= static_cast<int>(x.size()); ++v)
      for (int e = exponent(m, v); e > 0; --e) t *= x[v - 1];
    total += t;
  }
  return total;
}

template <class Real>
Real CubicalRational::eval(const std::vector<Real>& x) const {
  Real den = 1;
  for (int v = 1; v <= static_cast<int>(x.size()); ++v)
    for (int e = exponent(xden_, v); e > 0; --e) den *= x[v - 1];
  for (const auto& [key, e] : den_) {
    Real m = 1;
    for (int v = key.first; v <= key.second; ++v) m *= x[v - 1];
    Real a = Real(1) - m;
    for (int r = 0; r < e; ++r) den *= a;
  }
  return num_.eval(x) / den;
}

}  // namespace periods
