#include "periods/integrator.hpp"

#include "periods/error.hpp"

namespace periods::integrator {

using words::Word;

namespace {

using polylog::PolylogExpr;

struct Pipeline {
  PolylogExpr expr;
  std::vector<TraceRecord> trace;
};

/// Integrates over x_l, ..., x_1 in turn. Divergences are reported through `divergence`.
mzv::MzvCombination run_pipeline(PolylogExpr e, const Options& opt, std::vector<TraceRecord>& trace,
                                 ErrorCode divergence) {
  for (int k = e.ell(); k >= 1; --k) {
    try {
      e = polylog::primitive_last(e);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::PoleRequired || err.code() == ErrorCode::LogDivergence)
        throw Error(divergence, "face x" + std::to_string(k) + " = 0: " + err.what());
      throw;
    }
    if (opt.trace) trace.push_back({"primitive", k, e.size(), e.weight()});
    try {
      e = polylog::restrict_last_to_one(e);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::DivergentRestriction || err.code() == ErrorCode::InvalidInput)
        throw Error(divergence, "face x" + std::to_string(k) + " = 1: " + err.what());
      throw;
    }
    if (opt.trace) trace.push_back({"restriction", k, e.size(), e.weight()});
  }
  return e.to_mzv();
}

}  // namespace

void check_limits(const DihedralMonomial& m) {
  if (m.g.n() < 4 || m.g.n() > kMaxN) throw Error(ErrorCode::InvalidInput, "n must lie in 4..8");
  int total = 0;
  for (const auto& [c, e] : m.alpha) total += std::abs(e);
  if (total > kMaxTotalExponent)
    throw Error(ErrorCode::InvalidInput, "sum of exponents " + std::to_string(total) + " exceeds 12");
}

namespace {

PeriodResult cell_period(const DihedralMonomial& m, const Options& opt) {
  for (const auto& [c, e] : m.alpha)
    if (e < 0)
      throw Error(ErrorCode::NonConvergent,
                  "exponent of u" + std::to_string(c.i) + std::to_string(c.j) + " is " + std::to_string(e) +
                      "; the form has a pole along that face");
  const int ell = m.g.ell();
  PeriodResult res;
  res.weight_bound = ell;
  CubicalRational integrand = dihedral::monomial_to_cubical(m).rational();
  res.value = run_pipeline(PolylogExpr::constant(ell, integrand), opt, res.trace, ErrorCode::InternalDivergence);
  if (res.value.weight() > res.weight_bound) throw Error(ErrorCode::InternalDivergence, "weight bound violated");
  if (!(mzv::eval_double(res.value) > 0))
    throw Error(ErrorCode::InternalDivergence, "cell period " + res.value.str() + " is not positive");
  return res;
}

}  // namespace

PeriodResult integrate_cell(const DihedralMonomial& m, const Options& opt) {
  check_limits(m);
  return cell_period(m, opt);
}

mzv::MzvCombination kontsevich_closed_form(const std::vector<int>& eps) {
  Word w;
  int zeros = 0;
  for (auto it = eps.rbegin(); it != eps.rend(); ++it) {
    w.push_back(*it ? mzv::X1 : mzv::X0);
    zeros += *it ? 0 : 1;
  }
  return mzv::MzvCombination::zeta(w, zeros % 2 ? -1 : 1);
}

PeriodResult integrate_kontsevich(const std::vector<int>& eps, const Options& opt) {
  if (eps.size() < 2) throw Error(ErrorCode::InvalidInput, "Kontsevich forms need at least two variables");
  for (int e : eps)
    if (e != 0 && e != 1) throw Error(ErrorCode::InvalidInput, "epsilon entries must be 0 or 1");
  if (eps.front() != 1 || eps.back() != 0)
    throw Error(ErrorCode::NonConvergent, "Kontsevich form needs eps_1 = 1 and eps_l = 0");
  dihedral::KontsevichMonomial km = dihedral::kontsevich_to_monomial(eps);
  PeriodResult cell = integrate_cell(km.monomial, opt);
  PeriodResult res = cell;
  res.value = cell.value * Rational(km.sign);
  mzv::MzvCombination expected = kontsevich_closed_form(eps);
  if (!(res.value == expected) && !(mzv::reduce(res.value - expected).is_zero()) &&
      !mzv::numerically_equal(res.value, expected, 30))
    throw Error(ErrorCode::InternalDivergence,
                "Kontsevich integral " + res.value.str() + " differs from " + expected.str());
  return res;
}

Rational integrate_beta(int a13, int a24) {
  if (a13 < 0 || a24 < 0) throw Error(ErrorCode::InvalidInput, "beta exponents must be nonnegative");
  dihedral::DihedralNGon g(4);
  DihedralMonomial m = dihedral::make_monomial(g, {{ngon::Chord(1, 3), a13}, {ngon::Chord(2, 4), a24}});
  // One variable, so the exponent limit that guards the general pipeline is not needed here.
  mzv::MzvCombination v = cell_period(m, Options{false}).value;
  if (!v.terms().empty()) throw Error(ErrorCode::InternalDivergence, "weight-one period is not rational: " + v.str());
  return v.constant();
}

PeriodResult integrate_polylog(const PolylogExpr& e, int n, const Options& opt) {
  if (n < 4 || n > kMaxN) throw Error(ErrorCode::InvalidInput, "n must lie in 4..8");
  dihedral::DihedralNGon g(n);
  if (e.ell() != g.ell()) throw Error(ErrorCode::InvalidInput, "expression has the wrong number of variables");
  PeriodResult res;
  res.weight_bound = g.ell() + e.weight();
  PolylogExpr integrand = e * dihedral::omega_atoms(g).to_rational();
  res.value = run_pipeline(integrand, opt, res.trace, ErrorCode::NonConvergent);
  if (res.value.weight() > res.weight_bound) throw Error(ErrorCode::InternalDivergence, "weight bound violated");
  return res;
}

PolylogExpr log_u(const dihedral::DihedralNGon& g, const ngon::Chord& c) {
  AtomProduct p = dihedral::u_atoms(g, c);
  if (p.coeff != 1) throw Error(ErrorCode::InternalDivergence, "u coordinate has a non-unit constant");
  const int ell = g.ell();
  PolylogExpr out(ell);
  for (const auto& [v, e] : p.x) out += PolylogExpr::word(ell, v, Word{0}, Rational(e));
  for (const auto& [ab, e] : p.atoms)
    out += PolylogExpr::word(ell, ab.second, Word{ab.first}, Rational(e));
  return out;
}

std::map<MultiIndex, mzv::MzvCombination> taylor_multibeta(const DihedralMonomial& m, int K) {
  if (K < 0 || K > 3) throw Error(ErrorCode::InvalidInput, "Taylor order must lie in 0..3");
  check_limits(m);
  for (const auto& [c, e] : m.alpha)
    if (e < 0) throw Error(ErrorCode::NonConvergent, "multi-beta expansion needs nonnegative exponents");
  const auto chords = ngon::chords(m.g);
  const int ell = m.g.ell();
  std::vector<PolylogExpr> logs;
  for (const auto& c : chords) logs.push_back(log_u(m.g, c));
  CubicalRational base = dihedral::monomial_to_cubical(m).rational() * dihedral::omega_atoms(m.g).to_rational().inverse();
  std::map<MultiIndex, mzv::MzvCombination> out;
  std::vector<int> kappa(chords.size(), 0);
  // Enumerate multi-indices with |kappa| <= K; integrand prod (log u)^kappa.
  auto rec = [&](auto&& self, std::size_t idx, int left, const PolylogExpr& prod) -> void {
    if (idx == chords.size()) {
      MultiIndex key;
      for (std::size_t i = 0; i < chords.size(); ++i)
        if (kappa[i]) key[chords[i]] = kappa[i];
      out[key] = integrate_polylog(prod * base, m.g.n(), Options{false}).value;
      return;
    }
    PolylogExpr p = prod;
    for (int k = 0; k <= left; ++k) {
      kappa[idx] = k;
      self(self, idx + 1, left - k, p);
      p = polylog::multiply(p, logs[idx]);
    }
    kappa[idx] = 0;
  };
  rec(rec, 0, K, PolylogExpr::constant(ell, 1));
  return out;
}

}  // namespace periods::integrator
