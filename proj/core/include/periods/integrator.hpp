#pragma once

#include <map>
#include <string>
#include <vector>

#include "periods/dihedral.hpp"
#include "periods/mzv.hpp"
#include "periods/polylog.hpp"

namespace periods::integrator {

using dihedral::DihedralMonomial;

constexpr int kMaxN = 8;
constexpr int kMaxTotalExponent = 12;

struct TraceRecord {
  /// "primitive" or "restriction".
  std::string stage;
  int variable = 0;
  std::size_t terms = 0;
  int weight = 0;
};

struct PeriodResult {
  mzv::MzvCombination value;
  int weight_bound = 0;
  std::vector<TraceRecord> trace;
};

struct Options {
  bool trace = true;
};

/// Integral of prod u^alpha * omega over the cell, as a combination of MZVs of weight <= n-3.
PeriodResult integrate_cell(const DihedralMonomial& m, const Options& opt = {});

/// Integral of the Kontsevich form for eps (eps_1 = 1, eps_l = 0), through integrate_cell.
PeriodResult integrate_kontsevich(const std::vector<int>& eps, const Options& opt = {});
/// (-1)^{l-r} zeta(x_{eps_l} ... x_{eps_1}), r the number of ones.
mzv::MzvCombination kontsevich_closed_form(const std::vector<int>& eps);

/// Integral of u13^a13 u24^a24 omega on M_{0,4}; the pipeline result must be rational.
/// The exponent-sum limit of integrate_cell does not apply.
Rational integrate_beta(int a13, int a24);

/// Integral of e * omega over the cell of M_{0,n}, e in the cubical coordinates of n.
PeriodResult integrate_polylog(const polylog::PolylogExpr& e, int n, const Options& opt = {});

/// log u_c in the canonical basis.
polylog::PolylogExpr log_u(const dihedral::DihedralNGon& g, const ngon::Chord& c);

/// Multi-index over chords -> Taylor coefficient of the multi-beta function at alpha,
/// for every multi-index with total order <= K.
using MultiIndex = std::map<ngon::Chord, int>;
std::map<MultiIndex, mzv::MzvCombination> taylor_multibeta(const DihedralMonomial& m, int K);

/// Throws InvalidInput outside n <= 8, sum alpha <= 12.
void check_limits(const DihedralMonomial& m);

}  // namespace periods::integrator
