#pragma once

#include <vector>

#include "periods/polylog.hpp"

namespace periods::polylog::detail {

/// Coefficient of dx_k in the slot-k letter a: 1/(x_k - sigma_a).
CubicalRational kappa(int k, Letter a);
/// x_a...x_{k-1} (1 for a = k).
CubicalRational letter_monomial(int k, Letter a);
/// Taylor coefficients g_0..g_N at x_k = 0 of G(u; x_k), u without a trailing zero letter.
std::vector<CubicalRational> taylor_at_zero(int k, const Word& u, int N);
/// The key with slot k replaced by w.
TermKey with_slot(TermKey key, int k, const Word& w);
/// Sum of c * G(w) in slot k added to out (base key supplies the other slots).
void add_word(PolylogExpr& out, const TermKey& base, int k, const Word& w, const CubicalRational& c);
/// True when every coefficient vanishes at two pseudo-random points of the cube.
bool numerically_zero(const PolylogExpr& e);

}  // namespace periods::polylog::detail
