#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "periods/dihedral.hpp"
#include "periods/error.hpp"
#include "periods/mzv.hpp"
#include "periods/polylog.hpp"
#include "periods/real.hpp"

namespace periods::numcheck {

enum class Method { TanhSinhTensor, MonteCarlo };
const char* method_name(Method m);

/// Evaluation point with accurate complements 1 - x_i.
struct Point {
  std::vector<Float128> x;
  std::vector<Float128> xc;
  /// 1 - x_i...x_j computed without cancellation.
  Float128 one_minus(int i, int j) const;
};
using Integrand = std::function<Float128(const Point&)>;

struct QuadratureReport {
  std::string estimate;
  /// Absolute error bound; for Monte Carlo three standard errors.
  std::string error_bound;
  Method method = Method::TanhSinhTensor;
  std::uint64_t nodes = 0;
  std::uint64_t seed = 0;
  bool converged = true;
  Float128 value = 0;
  Float128 bound = 0;
  std::string str() const;
};

struct Options {
  int target_digits = 10;
  std::uint64_t seed = 0x5eed;
  /// Monte Carlo sample count.
  std::uint64_t samples = 1u << 20;
  /// Budget on tanh-sinh function evaluations per refinement level.
  std::uint64_t node_budget = 4000000;
};

/// Thrown when the budget runs out before the target accuracy; carries the best estimate.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, QuadratureReport best)
      : Error(ErrorCode::BudgetExceeded, what), best_(std::move(best)) {}
  const QuadratureReport& best() const { return best_; }

 private:
  QuadratureReport best_;
};

/// Integral over the unit cube [0,1]^ell: tanh-sinh tensor rule for ell <= 3, stratified
/// Monte Carlo for ell = 4, 5.
QuadratureReport numeric_integrate(int ell, const Integrand& f, const Options& opt = {});
QuadratureReport numeric_integrate(const dihedral::CubicalIntegrand& c, const Options& opt = {});
/// Integral of an expression in cubical coordinates (the whole integrand, measure dx).
QuadratureReport numeric_integrate(const polylog::PolylogExpr& e, const Options& opt = {});
/// Forces one method regardless of ell.
QuadratureReport tanh_sinh(int ell, const Integrand& f, const Options& opt);
QuadratureReport monte_carlo(int ell, const Integrand& f, const Options& opt);

struct VerifyReport {
  mzv::MzvCombination symbolic;
  std::string symbolic_value;
  QuadratureReport numeric;
  std::string delta;
  bool pass = false;
  std::string str() const;
};

/// Compares a symbolic value against a quadrature report.
VerifyReport compare(const mzv::MzvCombination& symbolic, const QuadratureReport& q);
/// integrate_cell(m) against quadrature of the same integrand.
VerifyReport verify(const dihedral::DihedralMonomial& m, int digits, const Options& opt = {});

}  // namespace periods::numcheck
