#include "periods/error.hpp"
#include "periods/polylog.hpp"
#include "polylog_internal.hpp"

namespace periods::polylog {

namespace {

/// Adds a primitive in t = x_k of R * G(w; t) to out.
void integrate_term(int k, const CubicalRational& R, const Word& w, const TermKey& base, PolylogExpr& out) {
  if (R.is_zero()) return;
  if (w.size() + 1 > Word::kCapacity) throw Error(ErrorCode::BudgetExceeded, "word length exceeds capacity");
  PartialFractions pf = partial_fractions(R, k);
  CubicalRational phi;
  for (const auto& [r, c] : pf.zero) {
    if (r == 1)
      detail::add_word(out, base, k, Word{0} + w, c);
    else
      phi += c * CubicalRational::x(k, 1 - r) * Rational(-1, r - 1);
  }
  for (const auto& [i, parts] : pf.atom) {
    CubicalRational m = detail::letter_monomial(k, static_cast<Letter>(i));
    CubicalRational minv = m.inverse();
    for (const auto& [r, c] : parts) {
      if (r == 1)
        detail::add_word(out, base, k, Word{i} + w, -c * minv);
      else
        phi += c * minv * CubicalRational::atom(i, k, 1 - r) * Rational(1, r - 1);
    }
  }
  for (const auto& [d, c] : pf.poly) phi += c * CubicalRational::x(k, d + 1) * Rational(1, d + 1);
  if (phi.is_zero()) return;
  out.add(detail::with_slot(base, k, w), phi);
  if (!w.empty()) integrate_term(k, -(phi * detail::kappa(k, w[0])), w.slice(1, w.size()), base, out);
}

}  // namespace

PolylogExpr primitive_last(const PolylogExpr& e) {
  const int k = e.ell();
  if (k < 1) throw Error(ErrorCode::InvalidInput, "primitive needs at least one variable");
  PolylogExpr P(k);
  for (const auto& [key, R] : e.terms()) {
    TermKey base = detail::with_slot(key, k, Word{});
    integrate_term(k, R, key.slots[k - 1], base, P);
    check_budget(P);
  }
  PolylogExpr at_zero;
  try {
    at_zero = limit_at_origin(P, k);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::LogDivergence)
      throw Error(ErrorCode::PoleRequired, std::string("primitive is singular at the origin (") + err.what() + ")");
    throw;
  }
  return P - at_zero;
}

}  // namespace periods::polylog
