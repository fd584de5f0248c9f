#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "periods/rational.hpp"

namespace periods::braid {

/// delta_{ij} (a chord of the n-gon) or t_{ij} (any pair of labels), stored with i < j.
struct Generator {
  enum class Kind { Delta, T };
  Kind kind = Kind::Delta;
  int i = 0;
  int j = 0;
  static Generator delta(int a, int b);
  static Generator t(int a, int b);
  friend auto operator<=>(const Generator&, const Generator&) = default;
  std::string str() const;
};

/// Degree-1 element: linear combination of generators.
using Linear = std::map<Generator, Rational>;

/// Degree-2 element: coefficients of ordered generator pairs.
class BraidTensor {
 public:
  using Key = std::pair<Generator, Generator>;
  const std::map<Key, Rational>& terms() const { return terms_; }
  void add(const Generator& a, const Generator& b, const Rational& c);
  BraidTensor operator+(const BraidTensor& o) const;
  BraidTensor operator*(const Rational& c) const;
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const BraidTensor&, const BraidTensor&) = default;
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

/// [a, b] = a b - b a.
BraidTensor commutator(const Linear& a, const Linear& b);

/// t_ij = delta_{i j-1} + delta_{i-1 j} - delta_{i-1 j-1} - delta_{ij}, labels mod n, with
/// delta_ii = delta_{i i+1} = 0.
Linear t_from_delta(int n, int i, int j);
/// delta_ij = sum_{i < a < b <= j} t_ab for a chord with i < j.
Linear delta_from_t(int n, int i, int j);

/// Rewrites every t symbol through t_from_delta (delta symbols pass through).
Linear substitute_t(int n, const Linear& x);
/// Rewrites every delta symbol through delta_from_t.
Linear substitute_delta(int n, const Linear& x);

/// Dihedral relations [T_ij, T_kl] with i, j, k, l distinct, written in delta symbols.
std::vector<BraidTensor> dihedral_relations(int n);
/// Dimension of the span of dihedral_relations(n).
int dihedral_span_dimension(int n);
/// Dimension of the span of [t_ij, t_kl], distinct indices, modulo sum_k t_kl = 0.
int commutator_span_dimension(int n);

/// The two degree-2 relation spans agree after t <-> delta substitution.
bool relation_span_equivalence(int n);
/// Every [delta_ij, delta_kl] over non-crossing chords lies in the dihedral span.
bool noncrossing_commutators_in_span(int n);
/// Membership of a delta tensor in the dihedral span.
bool in_dihedral_span(int n, const BraidTensor& x);

/// [d13,d24] + [d24,d35] + [d35,d41] + [d41,d52] + [d52,d13] for n = 5.
BraidTensor five_term_element();

}  // namespace periods::braid
