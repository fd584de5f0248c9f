#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periods/cubical_rational.hpp"
#include "periods/ngon.hpp"

namespace periods::dihedral {

using ngon::Chord;
using ngon::ChordSet;
using ngon::DihedralNGon;
using ngon::StablePartition;

/// prod u_ij^alpha_ij; chords absent from the map have exponent 0.
struct DihedralMonomial {
  DihedralNGon g{4};
  std::map<Chord, int> alpha;

  int exponent(const Chord& c) const;
  int total() const;
  /// alpha -> alpha o sigma, so that the integrand pulls back along sigma.
  DihedralMonomial transformed(const ngon::Symmetry& s) const;
  friend bool operator==(const DihedralMonomial& a, const DihedralMonomial& b) {
    return a.g.n() == b.g.n() && a.alpha == b.alpha;
  }
};

DihedralMonomial make_monomial(const DihedralNGon& g, const std::map<Chord, int>& alpha);

/// prod x_i^a_i (1-x_i)^b_i prod_{i<j} (1-x_i...x_j)^c_ij dx_1...dx_l
struct CubicalIntegrand {
  std::vector<int> a;
  std::vector<int> b;
  std::map<std::pair<int, int>, int> c;
  int ell() const { return static_cast<int>(a.size()); }
  AtomProduct atom_product() const;
  CubicalRational rational() const { return atom_product().to_rational(); }
  friend bool operator==(const CubicalIntegrand&, const CubicalIntegrand&) = default;
};

/// u_c as a product of x's and atoms in cubical coordinates.
AtomProduct u_atoms(const DihedralNGon& g, const Chord& c);
CubicalRational u_to_cubical(const DihedralNGon& g, const Chord& c);
/// The form omega in cubical coordinates: 1/prod (1 - x_i x_{i+1}).
AtomProduct omega_atoms(const DihedralNGon& g);

CubicalIntegrand monomial_to_cubical(const DihedralMonomial& m);
/// Inverse of the integer-linear map alpha -> (a, b, c).
DihedralMonomial cubical_to_monomial(const DihedralNGon& g, const CubicalIntegrand& ci);

/// Exponents (a', b', c') in simplicial coordinates 0 < t_1 < ... < t_l < 1.
struct SimplicialIntegrand {
  std::vector<int> a;
  std::vector<int> b;
  std::map<std::pair<int, int>, int> c;
};
SimplicialIntegrand monomial_to_simplicial(const DihedralMonomial& m);

/// u_A + u_B == 1 for completely crossing A, B; throws if they do not cross completely.
bool verify_complete_crossing_relation(const DihedralNGon& g, const ChordSet& A, const ChordSet& B);

/// 2 * ord_D [ij|kl].
int ord_cross_ratio_doubled(const StablePartition& p, int i, int j, int k, int l);
/// ord_D [ij|kl]; throws if the doubled value is odd.
int ord_cross_ratio(const StablePartition& p, int i, int j, int k, int l);
/// ord_D u_c.
int ord_u(const DihedralNGon& g, const StablePartition& p, const Chord& c);
/// ord_D of prod u^alpha * omega.
int ord_form(const DihedralMonomial& m, const StablePartition& p);

bool convergence_check(const DihedralMonomial& m);

/// Dihedral monomial m(eps) with m(eps) * omega = sign * wedge dt_i/(eps_i - t_i).
struct KontsevichMonomial {
  DihedralMonomial monomial;
  int sign = 1;
};
KontsevichMonomial kontsevich_to_monomial(const std::vector<int>& eps);

enum class KontsevichCase { One = 1, Two = 2, Three = 3, Four = 4 };
struct KontsevichDivisor {
  StablePartition partition;
  KontsevichCase kind;
  int order;
};
/// Every stable partition with its case and order from the closed classification.
std::vector<KontsevichDivisor> kontsevich_divisors(const std::vector<int>& eps);
/// Only those with negative order.
std::vector<KontsevichDivisor> kontsevich_singular_divisors(const std::vector<int>& eps);

}  // namespace periods::dihedral
