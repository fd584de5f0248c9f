#include "periods/cubical_rational.hpp"

#include <algorithm>
#include <sstream>

#include "periods/error.hpp"

namespace periods {

Monomial segment(int i, int j) {
  Monomial m = 0;
  for (int v = i; v <= j; ++v) m += var_power(v, 1);
  return m;
}

bool divides(Monomial a, Monomial b) {
  for (int v = 1; v <= kMaxVars; ++v)
    if (exponent(a, v) > exponent(b, v)) return false;
  return true;
}

Monomial mono_min(Monomial a, Monomial b) {
  Monomial m = 0;
  for (int v = 1; v <= kMaxVars; ++v) m += var_power(v, std::min(exponent(a, v), exponent(b, v)));
  return m;
}

Monomial mono_max(Monomial a, Monomial b) {
  Monomial m = 0;
  for (int v = 1; v <= kMaxVars; ++v) m += var_power(v, std::max(exponent(a, v), exponent(b, v)));
  return m;
}

std::string mono_str(Monomial m) {
  std::ostringstream os;
  bool first = true;
  for (int v = 1; v <= kMaxVars; ++v) {
    int e = exponent(m, v);
    if (!e) continue;
    if (!first) os << '*';
    os << 'x' << v;
    if (e > 1) os << '^' << e;
    first = false;
  }
  return first ? "1" : os.str();
}

namespace {

void check_exponents(Monomial a, Monomial b) {
  for (int v = 1; v <= kMaxVars; ++v)
    if (exponent(a, v) + exponent(b, v) > 255)
      throw Error(ErrorCode::BudgetExceeded, "monomial exponent overflow");
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_sorted(std::vector<Term> t) {
  Poly p;
  p.terms_ = std::move(t);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return 0;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return from_sorted(std::move(out));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].first) * o.terms_[0].second;
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].first) * terms_[0].second;
  check_exponents(terms_.back().first, o.terms_.back().first);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) prod.emplace_back(ma + mb, ca * cb);
  std::sort(prod.begin(), prod.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  for (auto& t : prod) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return from_sorted(std::move(out));
}

Poly Poly::mul_monomial(Monomial m) const {
  if (m == 0) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) {
    check_exponents(t.first, m);
    t.first += m;
  }
  return p;
}

Poly Poly::div_monomial(Monomial m) const {
  if (m == 0) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.first -= m;
  return p;
}

Poly Poly::pow(int e) const {
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return 0;
  Monomial m = terms_[0].first;
  for (const auto& t : terms_) m = mono_min(m, t.first);
  return m;
}

int Poly::degree(int v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent(t.first, v));
  return d;
}

int Poly::min_degree(int v) const {
  int d = 255;
  for (const auto& t : terms_) d = std::min(d, exponent(t.first, v));
  return terms_.empty() ? 0 : d;
}

int Poly::max_var() const {
  int mv = 0;
  for (const auto& t : terms_)
    for (int v = kMaxVars; v > mv; --v)
      if (exponent(t.first, v)) {
        mv = v;
        break;
      }
  return mv;
}

Poly Poly::coefficient(int v, int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (exponent(t.first, v) == d) out.emplace_back(t.first - var_power(v, d), t.second);
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return from_sorted(std::move(out));
}

Poly Poly::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = exponent(t.first, v);
    if (e) out.emplace_back(t.first - var_power(v, 1), t.second * e);
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return from_sorted(std::move(out));
}

Poly Poly::substitute(int v, const Rational& c) const {
  Poly out;
  std::map<Monomial, Rational> acc;
  for (const auto& t : terms_) {
    int e = exponent(t.first, v);
    Rational f = t.second;
    if (e) {
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), c.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), c.get_den_mpz_t(), e);
      f *= p;
    }
    if (f != 0) acc[t.first - var_power(v, e)] += f;
  }
  std::vector<Term> ts;
  for (auto& [m, c2] : acc)
    if (c2 != 0) ts.emplace_back(m, c2);
  return from_sorted(std::move(ts));
}

Poly Poly::compose(int v, const Poly& p) const {
  int d = degree(v);
  if (d == 0) return *this;
  // Horner in x_v.
  Poly r = coefficient(v, d);
  for (int k = d - 1; k >= 0; --k) r = r * p + coefficient(v, k);
  return r;
}

bool Poly::divide_one_minus(Monomial m, Poly& quotient) const {
  std::map<Monomial, Rational, std::greater<>> work;
  for (const auto& t : terms_) work.emplace(t.first, t.second);
  std::vector<Term> q;
  while (!work.empty()) {
    auto it = work.begin();
    if (!divides(m, it->first)) return false;
    Monomial qm = it->first - m;
    Rational c = it->second;
    work.erase(it);
    // N - (-c x^qm)(1 - m) = N + c x^qm - c x^(qm+m)
    q.emplace_back(qm, -c);
    auto [jt, inserted] = work.emplace(qm, c);
    if (!inserted) {
      jt->second += c;
      if (jt->second == 0) work.erase(jt);
    }
  }
  std::sort(q.begin(), q.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  quotient = from_sorted(std::move(q));
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (it->first == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << mono_str(it->first);
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- CubicalRational

namespace {

Poly atom_poly(int i, int j) { return Poly(1) - Poly::monomial(segment(i, j)); }

Poly atom_power(int i, int j, int e) {
  static thread_local std::map<std::tuple<int, int, int>, Poly> cache;
  auto key = std::make_tuple(i, j, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Poly p = atom_poly(i, j).pow(e);
  if (cache.size() < 4096) cache.emplace(key, p);
  return p;
}

}  // namespace

CubicalRational::CubicalRational(const Rational& c) : num_(c) {}

CubicalRational::CubicalRational(Poly numerator) : num_(std::move(numerator)) { normalize(); }

CubicalRational::CubicalRational(Poly numerator, Monomial xden, std::map<AtomKey, int> atoms)
    : num_(std::move(numerator)), xden_(xden) {
  for (auto& [k, e] : atoms) {
    if (k.first < 1 || k.second < k.first || k.second > kMaxVars)
      throw Error(ErrorCode::InvalidInput, "bad atom index");
    if (e > 0) den_[k] += e;
    if (e < 0) num_ = num_ * atom_power(k.first, k.second, -e);
  }
  normalize();
}

CubicalRational CubicalRational::x(int v, int power) {
  if (power >= 0) return CubicalRational(Poly::monomial(var_power(v, power)));
  return CubicalRational(Poly(1), var_power(v, -power), {});
}

CubicalRational CubicalRational::atom(int i, int j, int e) {
  return CubicalRational(Poly(1), 0, {{{i, j}, -e}});
}

CubicalRational CubicalRational::monomial(Monomial m, const Rational& c) {
  return CubicalRational(Poly::monomial(m, c));
}

void CubicalRational::normalize() {
  if (num_.is_zero()) {
    xden_ = 0;
    den_.clear();
    return;
  }
  if (xden_) {
    Monomial common = mono_min(num_.monomial_content(), xden_);
    if (common) {
      num_ = num_.div_monomial(common);
      xden_ -= common;
    }
  }
  for (auto it = den_.begin(); it != den_.end();) {
    Monomial m = segment(it->first.first, it->first.second);
    Poly q;
    while (it->second > 0 && num_.size() > 1 && num_.divide_one_minus(m, q)) {
      num_ = std::move(q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

bool CubicalRational::is_constant() const { return num_.is_constant() && xden_ == 0 && den_.empty(); }

Rational CubicalRational::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidInput, "rational function is not constant: " + str());
  return num_.constant_term();
}

int CubicalRational::max_var() const {
  int mv = num_.max_var();
  for (int v = kMaxVars; v > mv; --v)
    if (exponent(xden_, v)) mv = v;
  for (const auto& [k, e] : den_) mv = std::max(mv, k.second);
  return mv;
}

bool CubicalRational::depends_on(int v) const {
  if (num_.degree(v) > 0 || exponent(xden_, v) > 0) return true;
  for (const auto& [k, e] : den_)
    if (k.first <= v && v <= k.second) return true;
  return false;
}

int CubicalRational::atom_exponent(int i, int j) const {
  auto it = den_.find({i, j});
  return it == den_.end() ? 0 : it->second;
}

CubicalRational CubicalRational::operator+(const CubicalRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  CubicalRational r;
  if (xden_ == o.xden_ && den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.xden_ = xden_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  r.xden_ = mono_max(xden_, o.xden_);
  r.den_ = den_;
  for (const auto& [k, e] : o.den_) r.den_[k] = std::max(r.den_[k], e);
  auto lift = [&](const CubicalRational& a) {
    Poly p = a.num_.mul_monomial(r.xden_ - a.xden_);
    for (const auto& [k, e] : r.den_) {
      int have = a.atom_exponent(k.first, k.second);
      if (e > have) p = p * atom_power(k.first, k.second, e - have);
    }
    return p;
  };
  r.num_ = lift(*this) + lift(o);
  r.normalize();
  return r;
}

CubicalRational CubicalRational::operator-() const {
  CubicalRational r = *this;
  r.num_ = -r.num_;
  return r;
}

CubicalRational CubicalRational::operator-(const CubicalRational& o) const { return *this + (-o); }

CubicalRational CubicalRational::operator*(const Rational& c) const {
  if (c == 0) return CubicalRational();
  CubicalRational r = *this;
  r.num_ = r.num_ * c;
  return r;
}

CubicalRational operator*(const Rational& c, const CubicalRational& r) { return r * c; }

CubicalRational CubicalRational::operator*(const CubicalRational& o) const {
  if (is_zero() || o.is_zero()) return CubicalRational();
  if (o.is_constant()) return *this * o.num_.constant_term();
  if (is_constant()) return o * num_.constant_term();
  CubicalRational r;
  r.num_ = num_ * o.num_;
  check_exponents(xden_, o.xden_);
  r.xden_ = xden_ + o.xden_;
  r.den_ = den_;
  for (const auto& [k, e] : o.den_) r.den_[k] += e;
  r.normalize();
  return r;
}

CubicalRational CubicalRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  CubicalRational r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CubicalRational CubicalRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero rational function");
  Poly rest = num_;
  Monomial content = rest.monomial_content();
  rest = rest.div_monomial(content);
  std::map<AtomKey, int> top;
  int mv = rest.max_var();
  for (int i = 1; i <= mv && !rest.is_constant(); ++i)
    for (int j = i; j <= mv && !rest.is_constant(); ++j) {
      Poly q;
      while (rest.size() > 1 && rest.divide_one_minus(segment(i, j), q)) {
        rest = std::move(q);
        ++top[{i, j}];
      }
    }
  if (!rest.is_constant())
    throw Error(ErrorCode::InvalidInput, "numerator is not a product of atoms: " + num_.str());
  CubicalRational r;
  r.num_ = Poly(1 / rest.constant_term()).mul_monomial(xden_);
  for (const auto& [k, e] : den_) r.num_ = r.num_ * atom_power(k.first, k.second, e);
  r.xden_ = content;
  r.den_ = top;
  r.normalize();
  return r;
}

CubicalRational CubicalRational::derivative(int v) const {
  int d = exponent(xden_, v);
  std::vector<AtomKey> involved;
  for (const auto& [k, e] : den_)
    if (k.first <= v && v <= k.second) involved.push_back(k);
  if (d == 0 && involved.empty()) {
    CubicalRational r;
    r.num_ = num_.derivative(v);
    r.xden_ = xden_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  // R' = [x_v P N' - d N P + N sum_a e_a M_a P/A_a] / (D x_v P), P = prod of involved atoms.
  Poly P(1);
  for (const auto& k : involved) P = P * atom_poly(k.first, k.second);
  Poly numer = num_.derivative(v).mul_monomial(var_power(v, 1)) * P;
  if (d) numer -= num_ * P * Rational(d);
  for (const auto& k : involved) {
    Poly others(1);
    for (const auto& k2 : involved)
      if (k2 != k) others = others * atom_poly(k2.first, k2.second);
    numer += (num_ * others).mul_monomial(segment(k.first, k.second)) * Rational(den_.at(k));
  }
  CubicalRational r;
  r.num_ = std::move(numer);
  check_exponents(xden_, var_power(v, 1));
  r.xden_ = xden_ + var_power(v, 1);
  r.den_ = den_;
  for (const auto& k : involved) ++r.den_[k];
  r.normalize();
  return r;
}

CubicalRational CubicalRational::set_last_one(int v) const {
  if (atom_exponent(v, v) > 0)
    throw Error(ErrorCode::DivergentRestriction, "pole along x" + std::to_string(v) + "=1");
  std::map<AtomKey, int> atoms;
  for (const auto& [k, e] : den_) {
    if (k.first <= v && v < k.second)
      throw Error(ErrorCode::InvalidInput, "x" + std::to_string(v) + " is not the last variable");
    if (k.second == v)
      atoms[{k.first, v - 1}] += e;
    else
      atoms[k] += e;
  }
  return CubicalRational(num_.substitute(v, 1), xden_ - var_power(v, exponent(xden_, v)), atoms);
}

CubicalRational CubicalRational::set_zero(int v) const {
  if (exponent(xden_, v) > 0)
    throw Error(ErrorCode::LogDivergence, "pole along x" + std::to_string(v) + "=0");
  std::map<AtomKey, int> atoms;
  for (const auto& [k, e] : den_)
    if (!(k.first <= v && v <= k.second)) atoms[k] = e;
  return CubicalRational(num_.substitute(v, 0), xden_, atoms);
}

namespace {

using Series = std::vector<CubicalRational>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// (1 + c u)^{-e} truncated to len terms.
Series binomial_series(const CubicalRational& c, int e, std::size_t len) {
  Series out(len);
  CubicalRational p(1);
  for (std::size_t q = 0; q < len; ++q) {
    out[q] = p * binomial(-e, static_cast<int>(q));
    p *= c;
  }
  return out;
}

}  // namespace

std::vector<CubicalRational> CubicalRational::laurent_zero(int v, int lo, int hi) const {
  std::vector<CubicalRational> out(hi - lo + 1);
  if (is_zero() || hi < lo) return out;
  int d = exponent(xden_, v);
  int top = hi + d;  // highest power needed in the regular part
  if (top < 0) return out;
  std::size_t len = static_cast<std::size_t>(top) + 1;
  std::map<AtomKey, int> rest;
  std::vector<std::pair<AtomKey, int>> involved;
  for (const auto& [k, e] : den_) {
    if (k.first <= v && v <= k.second) {
      if (k.second != v) throw Error(ErrorCode::InvalidInput, "laurent_zero: x_v must be the last variable");
      involved.emplace_back(k, e);
    } else {
      rest[k] = e;
    }
  }
  std::vector<Poly> ser(len);
  for (int p = 0; p < static_cast<int>(len); ++p) ser[p] = num_.coefficient(v, p);
  for (const auto& [k, e] : involved) {
    Monomial mprime = segment(k.first, k.second) - var_power(v, 1);
    std::vector<Poly> g(len);
    for (int q = 0; q < static_cast<int>(len); ++q)
      g[q] = Poly::monomial(Monomial(0), binomial(e + q - 1, q)) * Poly::monomial(mprime).pow(q);
    std::vector<Poly> prod(len);
    for (std::size_t a = 0; a < len; ++a) {
      if (ser[a].is_zero()) continue;
      for (std::size_t b = 0; a + b < len; ++b) prod[a + b] += ser[a] * g[b];
    }
    ser = std::move(prod);
  }
  Monomial xd = xden_ - var_power(v, d);
  for (int n = lo; n <= hi; ++n) {
    int p = n + d;
    if (p < 0 || p >= static_cast<int>(len)) continue;
    out[n - lo] = CubicalRational(ser[p], xd, rest);
  }
  return out;
}

std::vector<CubicalRational> CubicalRational::laurent_atom(int v, int i, int lo, int hi) const {
  std::vector<CubicalRational> out(hi - lo + 1);
  if (is_zero() || hi < lo) return out;
  int ei = atom_exponent(i, v);
  int top = hi + ei;
  if (top < 0) return out;
  std::size_t len = static_cast<std::size_t>(top) + 1;
  // t = (1 - u)/m, m = x_i...x_{v-1}
  Monomial m = i < v ? segment(i, v - 1) : Monomial(0);
  int d = exponent(xden_, v);
  std::map<AtomKey, int> rest;
  Series ser(len);
  for (int p = 0; p <= num_.degree(v); ++p) {
    Poly c = num_.coefficient(v, p);
    if (c.is_zero()) continue;
    // c * m^-p * (1-u)^p
    CubicalRational base = CubicalRational(c) * CubicalRational::monomial(m).pow(-p);
    for (int q = 0; q <= p && q < static_cast<int>(len); ++q)
      ser[q] += base * (binomial(p, q) * ((q % 2) ? -1 : 1));
  }
  if (d) {
    // t^-d = m^d (1-u)^-d
    ser = series_mul(ser, binomial_series(CubicalRational(-1), d, len), len);
    CubicalRational md = CubicalRational::monomial(m).pow(d);
    for (auto& s : ser) s *= md;
  }
  for (const auto& [k, e] : den_) {
    if (!(k.first <= v && v <= k.second)) {
      rest[k] = e;
      continue;
    }
    if (k.second != v) throw Error(ErrorCode::InvalidInput, "laurent_atom: x_v must be the last variable");
    int j = k.first;
    if (j == i) continue;
    CubicalRational one_minus_rho, ratio;
    if (j > i) {
      Monomial X = segment(i, j - 1);
      one_minus_rho = -CubicalRational::atom(i, j - 1) * CubicalRational::monomial(X).pow(-1);
      ratio = -CubicalRational::atom(i, j - 1, -1);
    } else {
      Monomial X = segment(j, i - 1);
      one_minus_rho = CubicalRational::atom(j, i - 1);
      ratio = CubicalRational::monomial(X) * CubicalRational::atom(j, i - 1, -1);
    }
    ser = series_mul(ser, binomial_series(ratio, e, len), len);
    CubicalRational f = one_minus_rho.pow(-e);
    for (auto& s : ser) s *= f;
  }
  CubicalRational d0(Poly(1), xden_ - var_power(v, d), rest);
  for (int n = lo; n <= hi; ++n) {
    int p = n + ei;
    if (p < 0 || p >= static_cast<int>(len)) continue;
    out[n - lo] = ser[p] * d0;
  }
  return out;
}

std::vector<CubicalRational> CubicalRational::laurent_one(int v, int lo, int hi) const {
  return laurent_atom(v, v, lo, hi);
}

std::string CubicalRational::str() const {
  std::string n = num_.str();
  if (xden_ == 0 && den_.empty()) return n;
  std::ostringstream os;
  os << '(' << n << ")/(";
  bool first = true;
  if (xden_) {
    os << mono_str(xden_);
    first = false;
  }
  for (const auto& [k, e] : den_) {
    if (!first) os << '*';
    os << "(1-" << mono_str(segment(k.first, k.second)) << ')';
    if (e > 1) os << '^' << e;
    first = false;
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- partial fractions

PartialFractions partial_fractions(const CubicalRational& r, int v) {
  PartialFractions pf;
  if (r.is_zero()) return pf;
  CubicalRational rest = r;
  int p = r.pole_order_zero(v);
  if (p > 0) {
    auto L = r.laurent_zero(v, -p, -1);
    for (int k = 1; k <= p; ++k) {
      const CubicalRational& c = L[-k + p];
      if (c.is_zero()) continue;
      pf.zero[k] = c;
      rest -= c * CubicalRational::x(v, -k);
    }
  }
  for (const auto& [k, e] : r.atoms()) {
    if (!(k.first <= v && v <= k.second)) continue;
    int i = k.first;
    auto L = r.laurent_atom(v, i, -e, -1);
    for (int q = 1; q <= e; ++q) {
      const CubicalRational& c = L[-q + e];
      if (c.is_zero()) continue;
      pf.atom[i][q] = c;
      rest -= c * CubicalRational::atom(i, v, -q);
    }
  }
  if (rest.pole_order_zero(v) > 0)
    throw Error(ErrorCode::InternalDivergence, "partial fractions left a pole at 0");
  for (const auto& [k, e] : rest.atoms())
    if (k.first <= v && v <= k.second)
      throw Error(ErrorCode::InternalDivergence, "partial fractions left an atom pole");
  CubicalRational den(Poly(1), rest.xden(), rest.atoms());
  for (int d = 0; d <= rest.numerator().degree(v); ++d) {
    Poly c = rest.numerator().coefficient(v, d);
    if (!c.is_zero()) pf.poly[d] = CubicalRational(c) * den;
  }
  return pf;
}

// ---------------------------------------------------------------- AtomProduct

AtomProduct AtomProduct::operator*(const AtomProduct& o) const {
  AtomProduct r = *this;
  r.coeff *= o.coeff;
  for (const auto& [v, e] : o.x)
    if ((r.x[v] += e) == 0) r.x.erase(v);
  for (const auto& [k, e] : o.atoms)
    if ((r.atoms[k] += e) == 0) r.atoms.erase(k);
  return r;
}

AtomProduct AtomProduct::pow(int e) const {
  AtomProduct r;
  if (e == 0) return r;
  if (coeff == 0 && e < 0) throw Error(ErrorCode::InvalidInput, "zero to a negative power");
  Rational c = 1;
  for (int k = 0; k < std::abs(e); ++k) c *= coeff;
  r.coeff = e > 0 ? c : 1 / c;
  for (const auto& [v, a] : x) r.x[v] = a * e;
  for (const auto& [k, a] : atoms) r.atoms[k] = a * e;
  return r;
}

CubicalRational AtomProduct::to_rational() const {
  Monomial num = 0, den = 0;
  for (const auto& [v, e] : x) (e > 0 ? num : den) += var_power(v, std::abs(e));
  std::map<CubicalRational::AtomKey, int> a;
  for (const auto& [k, e] : atoms) a[k] = -e;
  return CubicalRational(Poly::monomial(num, coeff), den, a);
}

std::string AtomProduct::str() const {
  std::ostringstream os;
  os << coeff.get_str();
  for (const auto& [v, e] : x) os << "*x" << v << "^" << e;
  for (const auto& [k, e] : atoms) os << "*(1-" << mono_str(segment(k.first, k.second)) << ")^" << e;
  return os.str();
}

}  // namespace periods
