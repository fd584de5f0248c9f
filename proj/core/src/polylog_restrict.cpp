#include <mutex>
#include <tuple>

#include "periods/error.hpp"
#include "periods/polylog.hpp"
#include "polylog_internal.hpp"

namespace periods::polylog {

namespace {

/// (order p, log power j) -> coefficient of s^p log^j s, s = 1 - x_k, in x_1..x_{k-1}.
using Expansion = std::map<std::pair<int, int>, PolylogExpr>;

std::mutex cache_mu;
std::map<std::pair<int, Word>, PolylogExpr> value_cache;
std::map<std::tuple<int, Word, int>, Expansion> expansion_cache;

bool pure_zeta_word(int m, const Word& v) {
  for (auto a : v)
    if (a != 0 && a != m + 1) return false;
  return true;
}

/// G(v; 1) for v not starting with the letter m+1 and not ending in 0.
PolylogExpr value_clean(int m, const Word& v) {
  if (v.empty()) return PolylogExpr::constant(m, 1);
  if (pure_zeta_word(m, v)) {
    Word u;
    for (auto a : v) u.push_back(a == 0 ? mzv::X0 : mzv::X1);
    Rational sign = u.count(mzv::X1) % 2 ? -1 : 1;
    return PolylogExpr::from_mzv(m, mzv::MzvCombination::zeta(u, sign));
  }
  const int n = static_cast<int>(v.size());
  auto letter = [&](int i) -> int {
    if (i == 0) return m + 1;
    if (i == n + 1) return 0;
    return v[i - 1];
  };
  PolylogExpr integrand(m);
  for (int i = 1; i <= n; ++i) {
    CubicalRational c = log_difference(m + 1, letter(i - 1), letter(i)).derivative(m) -
                        log_difference(m + 1, letter(i + 1), letter(i)).derivative(m);
    if (c.is_zero()) continue;
    integrand += regularized_value_at_one(m, v.without(i - 1)) * c;
  }
  // Every letter in 1..m escapes to infinity as x_m -> 0, so the constant is zero.
  return primitive_last(integrand);
}

const Expansion& expansion_at_one(int k, const Word& w, int P) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = expansion_cache.find({k, w, P});
    if (it != expansion_cache.end()) return it->second;
  }
  Expansion res;
  if (w.empty()) {
    res.emplace(std::make_pair(0, 0), PolylogExpr::constant(k - 1, 1));
  } else {
    const Letter a = w[0];
    const Expansion tail = expansion_at_one(k, w.slice(1, w.size()), P);
    // kappa_a(1 - sigma) = sum_q kq[q] sigma^q
    std::map<int, CubicalRational> kq;
    if (a == k) {
      kq[-1] = -1;
    } else if (a == 0) {
      for (int q = 0; q < P; ++q) kq[q] = 1;
    } else {
      CubicalRational m = -CubicalRational::monomial(segment(a, k - 1));
      for (int q = 0; q < P; ++q) kq[q] = m.pow(q + 1) * CubicalRational::atom(a, k - 1, -(q + 1));
    }
    res.emplace(std::make_pair(0, 0), regularized_value_at_one(k - 1, w));
    auto add = [&](int p, int j, const PolylogExpr& c) {
      auto [it, inserted] = res.emplace(std::make_pair(p, j), c);
      if (!inserted) it->second += c;
    };
    for (const auto& [pj, e] : tail)
      for (const auto& [q, kc] : kq) {
        const int n = pj.first + q, j = pj.second;
        if (n + 1 > P) continue;
        PolylogExpr c = e * kc;
        if (n == -1) {
          add(0, j + 1, c * CubicalRational(Rational(-1, j + 1)));
          continue;
        }
        // int_0^s sigma^n log^j sigma = sum_q s^{n+1} log^q s j!/q! (-1)^{j-q} / (n+1)^{j-q+1}
        for (int qq = 0; qq <= j; ++qq) {
          Rational f = ratio(factorial(j), factorial(qq));
          for (int r = 0; r < j - qq + 1; ++r) f /= (n + 1);
          if ((j - qq) % 2) f = -f;
          add(n + 1, qq, c * CubicalRational(-f));
        }
      }
    for (auto it = res.begin(); it != res.end();)
      it = it->second.is_zero() ? res.erase(it) : std::next(it);
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  return expansion_cache.emplace(std::make_tuple(k, w, P), std::move(res)).first->second;
}

}  // namespace

PolylogExpr regularized_value_at_one(int m, const Word& v) {
  if (m < 0 || m >= kMaxEll) throw Error(ErrorCode::InvalidInput, "value at one needs 0 <= m < 5");
  for (auto a : v)
    if (a > m + 1) throw Error(ErrorCode::InvalidInput, "letter outside the alphabet of the restricted slot");
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = value_cache.find({m, v});
    if (it != value_cache.end()) return it->second;
  }
  PolylogExpr out(m);
  auto lead = words::split_leading(static_cast<Letter>(m + 1), v);
  auto it = lead.find(0);
  if (it != lead.end())
    for (const auto& [u, cu] : it->second) {
      auto trail = words::split_trailing(0, u);
      auto jt = trail.find(0);
      if (jt == trail.end()) continue;
      for (const auto& [w, cw] : jt->second) out += value_clean(m, w) * CubicalRational(cu * cw);
    }
  std::lock_guard<std::mutex> lock(cache_mu);
  return value_cache.emplace(std::make_pair(m, v), out).first->second;
}

PolylogExpr restrict_last_to_one(const PolylogExpr& e) {
  const int k = e.ell();
  if (k < 1) throw Error(ErrorCode::InvalidInput, "restriction needs at least one variable");
  PolylogExpr out(k - 1);
  std::map<std::pair<int, int>, PolylogExpr> divergent;
  for (const auto& [key, R] : e.terms()) {
    const Word& w = key.slots[k - 1];
    TermKey lower_key{key.zeta, std::vector<Word>(key.slots.begin(), key.slots.end() - 1)};
    PolylogExpr lower(k - 1);
    lower.add(lower_key, 1);
    const int r = std::max(0, R.atom_exponent(k, k));
    std::vector<CubicalRational> laurent;
    if (r == 0)
      laurent = {R.set_last_one(k)};
    else
      laurent = R.laurent_one(k, -r, 0);
    const Expansion& E = expansion_at_one(k, w, r);
    for (int o = -r; o <= 0; ++o) {
      const CubicalRational& Ro = laurent[o + r];
      if (Ro.is_zero()) continue;
      for (const auto& [pj, ex] : E) {
        const int order = o + pj.first;
        if (order > 0) continue;
        PolylogExpr c = multiply(lower, ex * Ro);
        if (order == 0 && pj.second == 0) {
          out += c;
        } else {
          auto [it, inserted] = divergent.emplace(std::make_pair(order, pj.second), c);
          if (!inserted) it->second += c;
        }
      }
    }
    check_budget(out);
  }
  for (const auto& [oj, c] : divergent) {
    if (c.is_zero()) continue;
    PolylogExpr red = c.reduce_scalars();
    if (red.is_zero() || detail::numerically_zero(red)) continue;
    throw Error(ErrorCode::DivergentRestriction,
                "restriction to x" + std::to_string(k) + " = 1 keeps a divergent part of order " +
                    std::to_string(oj.first) + " with log power " + std::to_string(oj.second));
  }
  return out;
}

}  // namespace periods::polylog
