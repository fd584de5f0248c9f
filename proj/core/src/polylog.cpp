#include "periods/polylog.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "periods/error.hpp"
#include "polylog_internal.hpp"

namespace periods::polylog {

std::string FiberLetter::str() const {
  std::ostringstream os;
  if (i == 0)
    os << "dlog(x" << slot << ')';
  else
    os << "dlog(1-" << mono_str(segment(i, slot)) << ')';
  return os.str();
}

int TermKey::weight() const {
  int w = static_cast<int>(zeta.size());
  for (const auto& s : slots) w += static_cast<int>(s.size());
  return w;
}

PolylogExpr::PolylogExpr(int ell) : ell_(ell) {
  if (ell < 0 || ell > kMaxEll) throw Error(ErrorCode::InvalidInput, "number of cubical variables must lie in 0..5");
}

PolylogExpr PolylogExpr::constant(int ell, const CubicalRational& r) {
  PolylogExpr e(ell);
  e.add(TermKey{Word{}, std::vector<Word>(ell)}, r);
  return e;
}

PolylogExpr PolylogExpr::word(int ell, int slot, const Word& w, const CubicalRational& coeff) {
  if (slot < 1 || slot > ell) throw Error(ErrorCode::InvalidInput, "slot out of range");
  for (auto a : w)
    if (a > slot) throw Error(ErrorCode::InvalidInput, "letter outside the slot alphabet");
  PolylogExpr e(ell);
  TermKey k{Word{}, std::vector<Word>(ell)};
  k.slots[slot - 1] = w;
  e.add(k, coeff);
  return e;
}

PolylogExpr PolylogExpr::from_mzv(int ell, const mzv::MzvCombination& c) {
  PolylogExpr e(ell);
  if (c.constant() != 0) e.add(TermKey{Word{}, std::vector<Word>(ell)}, CubicalRational(c.constant()));
  for (const auto& [w, q] : c.terms()) e.add(TermKey{w, std::vector<Word>(ell)}, CubicalRational(q));
  return e;
}

int PolylogExpr::weight() const {
  int w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, k.weight());
  return w;
}

void PolylogExpr::add(const TermKey& key, const CubicalRational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(key.slots.size()) != ell_) throw Error(ErrorCode::InvalidInput, "term has the wrong slot count");
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolylogExpr PolylogExpr::operator+(const PolylogExpr& o) const {
  PolylogExpr r = *this;
  r += o;
  return r;
}

PolylogExpr& PolylogExpr::operator+=(const PolylogExpr& o) {
  if (o.ell_ != ell_) throw Error(ErrorCode::InvalidInput, "adding expressions in different variable counts");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

PolylogExpr PolylogExpr::operator-() const { return *this * CubicalRational(-1); }
PolylogExpr PolylogExpr::operator-(const PolylogExpr& o) const { return *this + (-o); }

PolylogExpr PolylogExpr::operator*(const CubicalRational& c) const {
  PolylogExpr r(ell_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

PolylogExpr PolylogExpr::with_ell(int ell) const {
  PolylogExpr r(ell);
  for (const auto& [k, c] : terms_) {
    TermKey nk{k.zeta, std::vector<Word>(ell)};
    for (int s = 0; s < static_cast<int>(k.slots.size()); ++s) {
      if (s < ell)
        nk.slots[s] = k.slots[s];
      else if (!k.slots[s].empty())
        throw Error(ErrorCode::InvalidInput, "dropping a nonempty slot");
    }
    r.add(nk, c);
  }
  return r;
}

mzv::MzvCombination PolylogExpr::to_mzv() const {
  mzv::MzvCombination out;
  for (const auto& [k, c] : terms_) {
    for (const auto& s : k.slots)
      if (!s.empty()) throw Error(ErrorCode::InvalidInput, "expression still carries fiber words");
    Rational q = c.constant_value();
    if (k.zeta.empty())
      out += mzv::MzvCombination(q);
    else
      out.add(k.zeta, q);
  }
  return out;
}

PolylogExpr PolylogExpr::reduce_scalars() const {
  PolylogExpr r(ell_);
  for (const auto& [k, c] : terms_) {
    if (k.zeta.empty()) {
      r.add(k, c);
      continue;
    }
    mzv::MzvCombination red = mzv::reduce(mzv::MzvCombination::zeta(k.zeta));
    TermKey nk = k;
    if (red.constant() != 0) {
      nk.zeta = Word{};
      r.add(nk, c * CubicalRational(red.constant()));
    }
    for (const auto& [w, q] : red.terms()) {
      nk.zeta = w;
      r.add(nk, c * CubicalRational(q));
    }
  }
  return r;
}

std::string PolylogExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    if (!k.zeta.empty()) os << '*' << mzv::MzvCombination::zeta(k.zeta).str();
    for (int s = 0; s < ell_; ++s) {
      if (k.slots[s].empty()) continue;
      os << "*G" << s + 1 << '[';
      for (std::size_t i = 0; i < k.slots[s].size(); ++i) os << (i ? "," : "") << static_cast<int>(k.slots[s][i]);
      os << ']';
    }
  }
  return os.str();
}

PolylogExpr multiply(const PolylogExpr& a, const PolylogExpr& b) {
  if (a.ell() != b.ell()) throw Error(ErrorCode::InvalidInput, "multiplying expressions in different variable counts");
  const int ell = a.ell();
  PolylogExpr out(ell);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      CubicalRational c = ca * cb;
      // Expand slot by slot: list of (key, coefficient).
      std::vector<std::pair<TermKey, Rational>> acc;
      words::WordCombination zs;
      if (ka.zeta.empty() || kb.zeta.empty())
        zs[ka.zeta + kb.zeta] = 1;
      else
        zs = words::shuffle(ka.zeta, kb.zeta);
      for (const auto& [z, q] : zs) acc.emplace_back(TermKey{z, std::vector<Word>(ell)}, q);
      for (int s = 0; s < ell; ++s) {
        const Word& u = ka.slots[s];
        const Word& v = kb.slots[s];
        if (u.empty() || v.empty()) {
          for (auto& [k, q] : acc) k.slots[s] = u + v;
          continue;
        }
        std::vector<std::pair<TermKey, Rational>> next;
        for (const auto& [w, q] : words::shuffle(u, v))
          for (const auto& [k, p] : acc) {
            TermKey nk = k;
            nk.slots[s] = w;
            next.emplace_back(std::move(nk), p * q);
          }
        acc = std::move(next);
      }
      for (const auto& [k, q] : acc) out.add(k, c * CubicalRational(q));
    }
  check_budget(out);
  return out;
}

// ---------------------------------------------------------------- helpers

namespace detail {

CubicalRational letter_monomial(int k, Letter a) {
  if (a == 0 || a > k) throw Error(ErrorCode::InvalidInput, "letter is not of the form 1 - x_i...x_k");
  return a == k ? CubicalRational(1) : CubicalRational::monomial(segment(a, k - 1));
}

CubicalRational kappa(int k, Letter a) {
  if (a == 0) return CubicalRational::x(k, -1);
  return -letter_monomial(k, a) * CubicalRational::atom(a, k, -1);
}

std::vector<CubicalRational> taylor_at_zero(int k, const Word& u, int N) {
  std::vector<CubicalRational> c(N + 1);
  c[0] = 1;
  for (std::size_t idx = u.size(); idx-- > 0;) {
    Letter a = u[idx];
    std::vector<CubicalRational> g(N + 1);
    if (a == 0) {
      if (!c[0].is_zero()) throw Error(ErrorCode::InvalidInput, "taylor_at_zero needs a word without trailing zero");
      for (int n = 1; n <= N; ++n) g[n] = c[n] * Rational(1, n);
    } else {
      CubicalRational m = letter_monomial(k, a);
      std::vector<CubicalRational> mp(N + 2);
      mp[0] = 1;
      for (int p = 1; p <= N + 1; ++p) mp[p] = mp[p - 1] * m;
      for (int n = 0; n < N; ++n) {
        CubicalRational s;
        for (int q = 0; q <= n; ++q)
          if (!c[q].is_zero()) s += c[q] * mp[n - q + 1];
        g[n + 1] = s * Rational(-1, n + 1);
      }
    }
    c = std::move(g);
  }
  return c;
}

TermKey with_slot(TermKey key, int k, const Word& w) {
  key.slots[k - 1] = w;
  return key;
}

void add_word(PolylogExpr& out, const TermKey& base, int k, const Word& w, const CubicalRational& c) {
  out.add(with_slot(base, k, w), c);
}

bool numerically_zero(const PolylogExpr& e) {
  if (e.is_zero()) return true;
  const unsigned digits = 40;
  const unsigned old = BigFloat::default_precision();
  BigFloat::default_precision(digits + 10);
  struct Restore {
    unsigned p;
    ~Restore() { BigFloat::default_precision(p); }
  } restore{old};
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<BigFloat> x;
    for (int v = 1; v <= e.ell(); ++v) x.push_back(BigFloat(trial ? 0.6 : 0.3) - BigFloat(v) / (11 + 7 * trial));
    BigFloat scale = 1;
    BigFloat val = 0;
    for (const auto& [k, c] : e.terms()) {
      PolylogExpr single(e.ell());
      single.add(k, c);
      BigFloat t = single.eval<BigFloat>(x, static_cast<int>(digits * 3.33) + 16);
      scale += abs(t);
      val += t;
    }
    if (abs(val) > scale * BigFloat("1e-30")) return false;
  }
  return true;
}

}  // namespace detail

using detail::kappa;

// ---------------------------------------------------------------- singularity differences

CubicalRational LogCombination::derivative(int k) const {
  CubicalRational out;
  auto it = x.find(k);
  if (it != x.end()) out += CubicalRational::x(k, -1) * Rational(it->second);
  for (const auto& [ab, e] : atoms) {
    if (!(ab.first <= k && k <= ab.second)) continue;
    // d/dx_k log(1 - M) = -(M/x_k)/(1 - M)
    CubicalRational m = CubicalRational::monomial(segment(ab.first, ab.second)) * CubicalRational::x(k, -1);
    out -= m * CubicalRational::atom(ab.first, ab.second, -1) * Rational(e);
  }
  return out;
}

AtomProduct LogCombination::exponentiated() const {
  AtomProduct p;
  p.x = x;
  p.atoms = atoms;
  return p;
}

namespace {

void add_log_monomial(LogCombination& L, int from, int to, int sign) {
  for (int v = from; v <= to; ++v)
    if ((L.x[v] += sign) == 0) L.x.erase(v);
}

void check_slot_letter(int slot, int a) {
  if (a != kArgument && (a < 0 || a > slot)) throw Error(ErrorCode::InvalidInput, "letter outside the slot alphabet");
}

}  // namespace

LogCombination log_difference(int slot, int a, int b) {
  check_slot_letter(slot, a);
  check_slot_letter(slot, b);
  LogCombination L;
  if (a == b) return L;
  if (b == kArgument || (a != kArgument && b == 0)) std::swap(a, b);
  // now a is the argument, or a == 0, or both are letters >= 1
  if (a == kArgument) {
    if (b == 0) {
      add_log_monomial(L, slot, slot, 1);
    } else {
      L.atoms[{b, slot}] += 1;
      add_log_monomial(L, b, slot - 1, -1);
    }
    return L;
  }
  if (a == 0) {
    add_log_monomial(L, b, slot - 1, -1);
    return L;
  }
  if (a > b) std::swap(a, b);
  L.atoms[{a, b - 1}] += 1;
  add_log_monomial(L, a, slot - 1, -1);
  return L;
}

CubicalRational singularity_difference(int slot, int a, int b) {
  check_slot_letter(slot, a);
  check_slot_letter(slot, b);
  auto sigma = [&](int c) -> CubicalRational {
    if (c == kArgument) return CubicalRational::x(slot);
    if (c == 0) return CubicalRational(0);
    return detail::letter_monomial(slot, static_cast<Letter>(c)).inverse();
  };
  return sigma(a) - sigma(b);
}

// ---------------------------------------------------------------- differentiation

namespace {

PolylogExpr own_slot_derivative(int ell, int k, const Word& w) {
  PolylogExpr out(ell);
  if (w.empty()) return out;
  TermKey key{Word{}, std::vector<Word>(ell)};
  key.slots[k - 1] = w.slice(1, w.size());
  out.add(key, kappa(k, w[0]));
  return out;
}

std::mutex diff_mu;
std::map<std::tuple<int, Word, int>, PolylogExpr> diff_cache;

/// d/dx_k of G(w; x_j) for k < j, as an expression in x_1..x_j.
PolylogExpr slot_derivative(int j, const Word& w, int k) {
  {
    std::lock_guard<std::mutex> lock(diff_mu);
    auto it = diff_cache.find({j, w, k});
    if (it != diff_cache.end()) return it->second;
  }
  PolylogExpr out(j);
  for (const auto& [r, comb] : words::split_trailing(0, w)) {
    PolylogExpr zeros = PolylogExpr::word(j, j, words::repeat(0, r));
    for (const auto& [u, c] : comb) {
      if (u.empty()) continue;
      Word tail = u.slice(1, u.size());
      CubicalRational kap = kappa(j, u[0]);
      PolylogExpr integrand = PolylogExpr::word(j, j, tail, kap.derivative(k));
      if (!tail.empty()) integrand += multiply(PolylogExpr::constant(j, kap), slot_derivative(j, tail, k));
      PolylogExpr d = primitive_last(integrand);
      out += multiply(d, zeros) * CubicalRational(c);
    }
  }
  std::lock_guard<std::mutex> lock(diff_mu);
  diff_cache.emplace(std::make_tuple(j, w, k), out);
  return out;
}

PolylogExpr closed_slot_derivative(int j, const Word& w, int k) {
  PolylogExpr out(j);
  const int n = static_cast<int>(w.size());
  auto letter = [&](int i) -> int {
    if (i == 0) return kArgument;
    if (i == n + 1) return 0;
    return w[i - 1];
  };
  for (int i = 1; i <= n; ++i) {
    CubicalRational c = log_difference(j, letter(i - 1), letter(i)).derivative(k) -
                        log_difference(j, letter(i + 1), letter(i)).derivative(k);
    if (c.is_zero()) continue;
    out.add(TermKey{Word{}, [&] {
                      std::vector<Word> s(j);
                      s[j - 1] = w.without(i - 1);
                      return s;
                    }()},
            c);
  }
  return out;
}

template <class SlotDerivative>
PolylogExpr diff_with(const PolylogExpr& e, int k, SlotDerivative slot_d) {
  const int ell = e.ell();
  if (k < 1 || k > ell) throw Error(ErrorCode::InvalidInput, "diff slot out of range");
  PolylogExpr out(ell);
  for (const auto& [key, R] : e.terms()) {
    out.add(key, R.derivative(k));
    for (int j = k; j <= ell; ++j) {
      const Word& w = key.slots[j - 1];
      if (w.empty()) continue;
      PolylogExpr d = slot_d(j, w).with_ell(ell);
      if (d.is_zero()) continue;
      PolylogExpr rest(ell);
      rest.add(detail::with_slot(key, j, Word{}), R);
      out += multiply(rest, d);
    }
  }
  check_budget(out);
  return out;
}

}  // namespace

PolylogExpr diff(const PolylogExpr& e, int k) {
  return diff_with(e, k, [k](int j, const Word& w) {
    return j == k ? own_slot_derivative(j, k, w) : slot_derivative(j, w, k);
  });
}

PolylogExpr diff_closed_form(const PolylogExpr& e, int k) {
  return diff_with(e, k, [k](int j, const Word& w) { return closed_slot_derivative(j, w, k); });
}

// ---------------------------------------------------------------- limits

PolylogExpr limit_at_origin(const PolylogExpr& e, int k) {
  const int ell = e.ell();
  if (k < 1 || k > ell) throw Error(ErrorCode::InvalidInput, "limit slot out of range");
  PolylogExpr out(ell);
  std::map<std::tuple<int, int, TermKey>, CubicalRational> divergent;
  for (const auto& [key, R] : e.terms()) {
    const int pole = R.pole_order_zero(k);
    bool escapes = false;
    for (int j = k + 1; j <= ell && !escapes; ++j)
      for (auto a : key.slots[j - 1])
        if (a >= 1 && a <= k) escapes = true;
    if (escapes) {
      if (pole > 0) throw Error(ErrorCode::InvalidInput, "limit of a vanishing letter against a pole is not supported");
      continue;
    }
    TermKey base = detail::with_slot(key, k, Word{});
    std::vector<CubicalRational> laurent;
    if (pole == 0)
      laurent = {R.set_zero(k)};
    else
      laurent = R.laurent_zero(k, -pole, 0);
    for (const auto& [j, comb] : words::split_trailing(0, key.slots[k - 1]))
      for (const auto& [u, cu] : comb) {
        auto g = detail::taylor_at_zero(k, u, pole);
        for (int o = -pole; o <= 0; ++o) {
          CubicalRational c;
          for (int n = 0; n <= o + pole; ++n)
            if (!g[n].is_zero()) c += laurent[o - n + pole] * g[n];
          if (c.is_zero()) continue;
          c = c * CubicalRational(cu);
          if (o == 0 && j == 0)
            out.add(base, c);
          else
            divergent[{o, j, base}] += c;
        }
      }
  }
  for (const auto& [k2, c] : divergent)
    if (!c.is_zero())
      throw Error(ErrorCode::LogDivergence, "limit at x" + std::to_string(k) + " -> 0 keeps a term of order " +
                                                std::to_string(std::get<0>(k2)) + " with log power " +
                                                std::to_string(std::get<1>(k2)));
  return out;
}

// ---------------------------------------------------------------- numerics

std::string eval_numeric(const PolylogExpr& e, const std::vector<Rational>& point, int digits) {
  if (digits < 1 || digits > 100) throw Error(ErrorCode::PrecisionUnattainable, "digits must lie in 1..100");
  if (static_cast<int>(point.size()) != e.ell()) throw Error(ErrorCode::InvalidInput, "point has the wrong dimension");
  for (const auto& q : point)
    if (!(q > 0 && q < 1)) throw Error(ErrorCode::InvalidInput, "point must lie strictly inside the unit cube");
  const unsigned old = BigFloat::default_precision();
  BigFloat::default_precision(digits + 20);
  std::vector<BigFloat> x;
  for (const auto& q : point) x.push_back(to_real<BigFloat>(q));
  BigFloat v = e.eval<BigFloat>(x, static_cast<int>((digits + 20) * 3.33) + 16);
  std::string s = v.str(digits, std::ios::fixed);
  BigFloat::default_precision(old);
  return s;
}

std::size_t term_budget() {
  static const std::size_t budget = [] {
    const char* env = std::getenv("PERIODS_TERM_BUDGET");
    if (env && *env) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(2000000);
  }();
  return budget;
}

void check_budget(const PolylogExpr& e) {
  if (e.size() > term_budget())
    throw Error(ErrorCode::BudgetExceeded,
                "expression has " + std::to_string(e.size()) + " terms, budget " + std::to_string(term_budget()));
}

}  // namespace periods::polylog
