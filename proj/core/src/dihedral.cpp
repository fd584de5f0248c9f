#include "periods/dihedral.hpp"

#include "linalg.hpp"
#include "periods/error.hpp"

namespace periods::dihedral {

int DihedralMonomial::exponent(const Chord& c) const {
  auto it = alpha.find(c);
  return it == alpha.end() ? 0 : it->second;
}

int DihedralMonomial::total() const {
  int s = 0;
  for (const auto& [c, e] : alpha) s += e;
  return s;
}

DihedralMonomial DihedralMonomial::transformed(const ngon::Symmetry& s) const {
  DihedralMonomial out{g, {}};
  for (const Chord& c : ngon::chords(g)) {
    int e = exponent(s.apply(g, c));
    if (e) out.alpha[c] = e;
  }
  return out;
}

DihedralMonomial make_monomial(const DihedralNGon& g, const std::map<Chord, int>& alpha) {
  DihedralMonomial m{g, {}};
  for (const auto& [c, e] : alpha) {
    Chord k = ngon::make_chord(g, c.i, c.j);
    if (e) m.alpha[k] += e;
    if (m.alpha[k] == 0) m.alpha.erase(k);
  }
  return m;
}

AtomProduct CubicalIntegrand::atom_product() const {
  AtomProduct p;
  for (int i = 1; i <= ell(); ++i) {
    if (a[i - 1]) p.x[i] = a[i - 1];
    if (b[i - 1]) p.atoms[{i, i}] = b[i - 1];
  }
  for (const auto& [k, e] : c)
    if (e) p.atoms[k] = e;
  return p;
}

namespace {

/// Marked point z_p in cubical coordinates: 1, infinity, 0, or x_i...x_l.
struct Point {
  enum Kind { One, Infinity, Zero, Product } kind;
  int i = 0;
};

Point point(const DihedralNGon& g, int p) {
  p = g.wrap(p);
  if (p == 1) return {Point::One};
  if (p == 2) return {Point::Infinity};
  if (p == 3) return {Point::Zero};
  return {Point::Product, p - 3};
}

AtomProduct monomial_product(int i, int ell) {
  AtomProduct r;
  for (int v = i; v <= ell; ++v) r.x[v] = 1;
  return r;
}

AtomProduct atom_factor(int i, int j, int e = 1) {
  AtomProduct r;
  r.atoms[{i, j}] = e;
  return r;
}

/// z_p - z_q for finite points.
AtomProduct difference(const DihedralNGon& g, int p, int q) {
  const int ell = g.ell();
  Point a = point(g, p), b = point(g, q);
  auto neg = [](AtomProduct x) {
    x.coeff = -x.coeff;
    return x;
  };
  if (a.kind == Point::One && b.kind == Point::Zero) return AtomProduct{};
  if (a.kind == Point::Zero && b.kind == Point::One) return neg(AtomProduct{});
  if (a.kind == Point::One && b.kind == Point::Product) return atom_factor(b.i, ell);
  if (a.kind == Point::Product && b.kind == Point::One) return neg(atom_factor(a.i, ell));
  if (a.kind == Point::Zero && b.kind == Point::Product) return neg(monomial_product(b.i, ell));
  if (a.kind == Point::Product && b.kind == Point::Zero) return monomial_product(a.i, ell);
  if (a.kind == Point::Product && b.kind == Point::Product && a.i != b.i) {
    // M_i - M_j = -M_j (1 - x_i...x_{j-1}) for i < j
    int i = std::min(a.i, b.i), j = std::max(a.i, b.i);
    AtomProduct r = monomial_product(j, ell) * atom_factor(i, j - 1);
    return a.i < b.i ? neg(r) : r;
  }
  throw Error(ErrorCode::InvalidInput, "degenerate point difference");
}

bool infinite(const DihedralNGon& g, int p) { return point(g, p).kind == Point::Infinity; }

/// [a b | c d] = (z_a - z_c)(z_b - z_d) / ((z_a - z_d)(z_b - z_c)), dropping factors at infinity.
AtomProduct cross_ratio(const DihedralNGon& g, int a, int b, int c, int d) {
  AtomProduct r;
  auto factor = [&](int p, int q, int e) {
    if (infinite(g, p) || infinite(g, q)) return;
    r = r * difference(g, p, q).pow(e);
  };
  factor(a, c, 1);
  factor(b, d, 1);
  factor(a, d, -1);
  factor(b, c, -1);
  return r;
}

int alpha_at(const DihedralMonomial& m, int p, int q) {
  const auto& g = m.g;
  if (!ngon::is_chord(g, p, q)) return 0;
  return m.exponent(ngon::make_chord(g, p, q));
}

std::vector<std::pair<int, int>> cubical_coordinates(int ell) {
  std::vector<std::pair<int, int>> keys;
  for (int i = 1; i <= ell; ++i) keys.emplace_back(0, i);  // a_i
  for (int i = 1; i <= ell; ++i) keys.emplace_back(i, i);  // b_i
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) keys.emplace_back(i, j);
  return keys;
}

std::vector<Rational> exponent_vector(const AtomProduct& p, int ell) {
  std::vector<Rational> v;
  for (const auto& [i, j] : cubical_coordinates(ell)) {
    if (i == 0) {
      auto it = p.x.find(j);
      v.emplace_back(it == p.x.end() ? 0 : it->second);
    } else {
      auto it = p.atoms.find({i, j});
      v.emplace_back(it == p.atoms.end() ? 0 : it->second);
    }
  }
  return v;
}

/// Finds alpha with prod u^alpha = target up to the constant factor.
std::map<Chord, int> solve_alpha(const DihedralNGon& g, const AtomProduct& target) {
  const int ell = g.ell();
  auto cs = ngon::chords(g);
  const auto rows = cubical_coordinates(ell);
  linalg::Matrix A(rows.size(), linalg::Row(cs.size(), 0));
  for (std::size_t c = 0; c < cs.size(); ++c) {
    auto col = exponent_vector(u_atoms(g, cs[c]), ell);
    for (std::size_t r = 0; r < rows.size(); ++r) A[r][c] = col[r];
  }
  auto sol = linalg::solve(A, exponent_vector(target, ell));
  if (!sol) throw Error(ErrorCode::InvalidInput, "exponents not in the image of the dihedral monomials");
  std::map<Chord, int> alpha;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const Rational& v = (*sol)[c];
    if (v.get_den() != 1) throw Error(ErrorCode::InvalidInput, "non-integral dihedral exponent");
    if (v != 0) alpha[cs[c]] = static_cast<int>(v.get_num().get_si());
  }
  return alpha;
}

}  // namespace

AtomProduct u_atoms(const DihedralNGon& g, const Chord& c) {
  Chord k = ngon::make_chord(g, c.i, c.j);
  return cross_ratio(g, k.i, k.i + 1, k.j + 1, k.j);
}

CubicalRational u_to_cubical(const DihedralNGon& g, const Chord& c) { return u_atoms(g, c).to_rational(); }

AtomProduct omega_atoms(const DihedralNGon& g) {
  AtomProduct w;
  for (int i = 1; i < g.ell(); ++i) w.atoms[{i, i + 1}] = -1;
  return w;
}

CubicalIntegrand monomial_to_cubical(const DihedralMonomial& m) {
  const int ell = m.g.ell();
  AtomProduct p = omega_atoms(m.g);
  for (const auto& [c, e] : m.alpha) p = p * u_atoms(m.g, c).pow(e);
  if (p.coeff != 1) throw Error(ErrorCode::InternalDivergence, "dihedral monomial has a non-unit constant");
  CubicalIntegrand ci;
  ci.a.assign(ell, 0);
  ci.b.assign(ell, 0);
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) ci.c[{i, j}] = 0;
  for (const auto& [v, e] : p.x) ci.a[v - 1] = e;
  for (const auto& [k, e] : p.atoms) {
    if (k.first == k.second)
      ci.b[k.first - 1] = e;
    else
      ci.c[k] = e;
  }
  return ci;
}

DihedralMonomial cubical_to_monomial(const DihedralNGon& g, const CubicalIntegrand& ci) {
  if (ci.ell() != g.ell()) throw Error(ErrorCode::InvalidInput, "integrand dimension does not match n-3");
  AtomProduct target = ci.atom_product() * omega_atoms(g).pow(-1);
  return DihedralMonomial{g, solve_alpha(g, target)};
}

SimplicialIntegrand monomial_to_simplicial(const DihedralMonomial& m) {
  const int ell = m.g.ell(), n = m.g.n();
  auto al = [&](int p, int q) { return alpha_at(m, p, q); };
  SimplicialIntegrand s;
  for (int i = 1; i <= ell; ++i) {
    s.a.push_back(al(3, i + 2) + al(2, i + 3) - al(3, i + 3) - al(2, i + 2));
    s.b.push_back(al(n, i + 3) + al(1, i + 2) - al(n, i + 2) - al(1, i + 3));
  }
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j)
      s.c[{i, j}] = al(i + 2, j + 3) + al(i + 3, j + 2) - al(i + 3, j + 3) - al(i + 2, j + 2);
  return s;
}

bool verify_complete_crossing_relation(const DihedralNGon& g, const ChordSet& A, const ChordSet& B) {
  if (!ngon::crosses_completely(A, B, g))
    throw Error(ErrorCode::InvalidInput, "chord sets do not cross completely");
  AtomProduct ua, ub;
  for (const Chord& c : A) ua = ua * u_atoms(g, c);
  for (const Chord& c : B) ub = ub * u_atoms(g, c);
  return ua.to_rational() + ub.to_rational() == CubicalRational(1);
}

int ord_cross_ratio_doubled(const StablePartition& p, int i, int j, int k, int l) {
  return p.same(i, k) + p.same(j, l) - p.same(i, l) - p.same(j, k);
}

int ord_cross_ratio(const StablePartition& p, int i, int j, int k, int l) {
  if (i == j || i == k || i == l || j == k || j == l || k == l)
    throw Error(ErrorCode::InvalidInput, "cross-ratio indices must be distinct");
  int d = ord_cross_ratio_doubled(p, i, j, k, l);
  if (d % 2) throw Error(ErrorCode::InternalDivergence, "odd doubled order");
  return d / 2;
}

int ord_u(const DihedralNGon& g, const StablePartition& p, const Chord& c) {
  Chord k = ngon::make_chord(g, c.i, c.j);
  return ord_cross_ratio(p, k.i, g.wrap(k.i + 1), g.wrap(k.j + 1), k.j);
}

int ord_form(const DihedralMonomial& m, const StablePartition& p) {
  const auto& g = m.g;
  const int n = g.n();
  int twice = g.ell() - 1;
  for (int i = 1; i <= n; ++i) twice -= p.same(i, g.wrap(i + 2));
  for (const auto& [c, e] : m.alpha)
    twice += e * (p.same(c.i, g.wrap(c.j + 1)) + p.same(g.wrap(c.i + 1), c.j) - p.same(c.i, c.j) -
                  p.same(g.wrap(c.i + 1), g.wrap(c.j + 1)));
  if (twice % 2) throw Error(ErrorCode::InternalDivergence, "odd doubled order of a form");
  return twice / 2;
}

bool convergence_check(const DihedralMonomial& m) {
  for (const auto& [c, e] : m.alpha)
    if (e < 0) return false;
  return true;
}

KontsevichMonomial kontsevich_to_monomial(const std::vector<int>& eps) {
  const int ell = static_cast<int>(eps.size());
  if (ell < 2) throw Error(ErrorCode::InvalidInput, "Kontsevich forms need l >= 2");
  for (int e : eps)
    if (e != 0 && e != 1) throw Error(ErrorCode::InvalidInput, "epsilon entries must be 0 or 1");
  DihedralNGon g(ell + 3);
  // Simplicial t_i = x_i...x_l, t_{l+1} = 1.
  auto t = [&](int i) { return i > ell ? AtomProduct{} : monomial_product(i, ell); };
  auto one_minus_t = [&](int i) { return atom_factor(i, ell); };
  AtomProduct f = t(2) * t(ell).pow(-1);
  if (eps[ell - 1]) {
    AtomProduct tl_minus_one = atom_factor(ell, ell);
    tl_minus_one.coeff = -1;
    f = f * t(ell) * tl_minus_one.pow(-1);
  }
  for (int i = 1; i < ell; ++i) {
    AtomProduct num = i + 2 > ell ? one_minus_t(i) : t(i + 2) * atom_factor(i, i + 1);
    AtomProduct den = eps[i - 1] ? one_minus_t(i) : t(i);
    if (!eps[i - 1]) den.coeff = -1;
    f = f * num * den.pow(-1);
  }
  KontsevichMonomial km;
  km.monomial = DihedralMonomial{g, solve_alpha(g, f)};
  AtomProduct check;
  for (const auto& [c, e] : km.monomial.alpha) check = check * u_atoms(g, c).pow(e);
  if (check.x != f.x || check.atoms != f.atoms || (f.coeff != 1 && f.coeff != -1))
    throw Error(ErrorCode::InternalDivergence, "Kontsevich form is not a dihedral monomial");
  // f * omega = -wedge dt_i/(eps_i - t_i), and m = |f|.
  km.sign = f.coeff > 0 ? -1 : 1;
  return km;
}

std::vector<KontsevichDivisor> kontsevich_divisors(const std::vector<int>& eps) {
  const int ell = static_cast<int>(eps.size());
  DihedralNGon g(ell + 3);
  std::vector<KontsevichDivisor> out;
  for (const auto& p : ngon::enumerate_stable_partitions(g)) {
    const std::set<int>* blocks[2] = {&p.block1, &p.block2};
    int b1 = p.block1.count(1) ? 0 : 1, b2 = p.block1.count(2) ? 0 : 1, b3 = p.block1.count(3) ? 0 : 1;
    KontsevichCase kind;
    const std::set<int>* other = nullptr;
    if (b1 == b2 && b2 == b3) {
      kind = KontsevichCase::One;
      other = blocks[1 - b1];
    } else if (b1 == b3) {
      kind = KontsevichCase::Two;
    } else if (b1 == b2) {
      kind = KontsevichCase::Three;
      other = blocks[b3];
    } else {
      kind = KontsevichCase::Four;
      other = blocks[b1];
    }
    int order = -1;
    if (kind == KontsevichCase::One) {
      order = static_cast<int>(other->size()) - 2;
    } else if (kind != KontsevichCase::Two) {
      int want = kind == KontsevichCase::Three ? 1 : 0;
      int count = 0;
      for (int s : *other)
        if (s >= 4 && eps[s - 4] == want) ++count;
      order = count - 1;
    }
    out.push_back({p, kind, order});
  }
  return out;
}

std::vector<KontsevichDivisor> kontsevich_singular_divisors(const std::vector<int>& eps) {
  std::vector<KontsevichDivisor> out;
  for (auto& d : kontsevich_divisors(eps))
    if (d.order < 0) out.push_back(d);
  return out;
}

}  // namespace periods::dihedral
