#include "periods/braid.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "linalg.hpp"
#include "periods/error.hpp"
#include "periods/ngon.hpp"

namespace periods::braid {

Generator Generator::delta(int a, int b) { return {Kind::Delta, std::min(a, b), std::max(a, b)}; }
Generator Generator::t(int a, int b) { return {Kind::T, std::min(a, b), std::max(a, b)}; }

std::string Generator::str() const {
  std::ostringstream os;
  os << (kind == Kind::Delta ? "d" : "t") << i << ',' << j;
  return os.str();
}

void BraidTensor::add(const Generator& a, const Generator& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BraidTensor BraidTensor::operator+(const BraidTensor& o) const {
  BraidTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

BraidTensor BraidTensor::operator*(const Rational& c) const {
  BraidTensor r;
  for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
  return r;
}

std::string BraidTensor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << c.get_str() << ' ' << k.first.str() << '*' << k.second.str();
    first = false;
  }
  return os.str();
}

BraidTensor commutator(const Linear& a, const Linear& b) {
  BraidTensor r;
  for (const auto& [g, cg] : a)
    for (const auto& [h, ch] : b) {
      r.add(g, h, cg * ch);
      r.add(h, g, -cg * ch);
    }
  return r;
}

namespace {

void add_to(Linear& x, const Generator& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = x.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

/// delta symbol with the zero conventions; labels taken mod n.
void add_delta(Linear& x, const ngon::DihedralNGon& g, int a, int b, const Rational& c) {
  a = g.wrap(a);
  b = g.wrap(b);
  if (a == b || g.adjacent(a, b)) return;
  add_to(x, Generator::delta(a, b), c);
}

void check_n(int n) {
  if (n < 4 || n > 8) throw Error(ErrorCode::InvalidInput, "braid layer supports 4 <= n <= 8");
}

std::vector<Generator> t_basis(int n) {
  std::vector<Generator> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(Generator::t(a, b));
  return out;
}

std::vector<Generator> delta_basis(int n) {
  std::vector<Generator> out;
  for (const auto& c : ngon::chords(ngon::DihedralNGon(n))) out.push_back(Generator::delta(c.i, c.j));
  return out;
}

/// Antisymmetric part of a tensor as a row over pairs p < q of the basis.
linalg::Row wedge_row(const BraidTensor& x, const std::vector<Generator>& basis) {
  const std::size_t m = basis.size();
  linalg::Row row(m * (m - 1) / 2, 0);
  auto index = [&](const Generator& g) {
    auto it = std::lower_bound(basis.begin(), basis.end(), g);
    if (it == basis.end() || *it != g) throw Error(ErrorCode::InvalidInput, "generator " + g.str() + " outside basis");
    return static_cast<std::size_t>(it - basis.begin());
  };
  for (const auto& [k, c] : x.terms()) {
    std::size_t p = index(k.first), q = index(k.second);
    if (p == q) continue;
    Rational s = c;
    if (p > q) {
      std::swap(p, q);
      s = -s;
    }
    row[p * m - p * (p + 1) / 2 + (q - p - 1)] += s;
  }
  return row;
}

class Span {
 public:
  explicit Span(linalg::Matrix rows) : rows_(std::move(rows)) {
    pivots_ = linalg::rref(rows_);
    rows_.resize(pivots_.size());
  }
  int dimension() const { return static_cast<int>(pivots_.size()); }
  bool contains(linalg::Row v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
  }

 private:
  linalg::Matrix rows_;
  std::vector<int> pivots_;
};

struct Quad {
  int i, j, k, l;
};

std::vector<Quad> distinct_pairs(int n) {
  std::vector<Quad> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == i && l <= j) continue;
          if (k == i || k == j || l == i || l == j) continue;
          out.push_back({i, j, k, l});
        }
  return out;
}

Linear single(const Generator& g) { return Linear{{g, Rational(1)}}; }

BraidTensor map_tensor(const BraidTensor& x, int n, bool to_t) {
  BraidTensor out;
  for (const auto& [k, c] : x.terms()) {
    Linear a = to_t ? substitute_delta(n, single(k.first)) : substitute_t(n, single(k.first));
    Linear b = to_t ? substitute_delta(n, single(k.second)) : substitute_t(n, single(k.second));
    for (const auto& [g, cg] : a)
      for (const auto& [h, ch] : b) out.add(g, h, c * cg * ch);
  }
  return out;
}

/// Rows (sum_k t_kl) ^ t_ab spanning the ideal of the centre relation in degree 2.
linalg::Matrix centre_rows(int n, const std::vector<Generator>& basis) {
  linalg::Matrix rows;
  for (int l = 1; l <= n; ++l) {
    Linear L;
    for (int k = 1; k <= n; ++k)
      if (k != l) add_to(L, Generator::t(k, l), 1);
    for (const auto& g : basis) rows.push_back(wedge_row(commutator(L, single(g)), basis));
  }
  return rows;
}

}  // namespace

Linear t_from_delta(int n, int i, int j) {
  ngon::DihedralNGon g(n);
  if (i < 1 || j > n || i >= j) throw Error(ErrorCode::InvalidInput, "t_ij needs 1 <= i < j <= n");
  Linear x;
  add_delta(x, g, i, j - 1, 1);
  add_delta(x, g, i - 1, j, 1);
  add_delta(x, g, i - 1, j - 1, -1);
  add_delta(x, g, i, j, -1);
  return x;
}

Linear delta_from_t(int n, int i, int j) {
  ngon::DihedralNGon g(n);
  ngon::Chord c = ngon::make_chord(g, i, j);
  Linear x;
  for (int a = c.i + 1; a <= c.j; ++a)
    for (int b = a + 1; b <= c.j; ++b) add_to(x, Generator::t(a, b), 1);
  return x;
}

Linear substitute_t(int n, const Linear& x) {
  Linear out;
  for (const auto& [g, c] : x) {
    if (g.kind == Generator::Kind::Delta) {
      add_to(out, g, c);
      continue;
    }
    for (const auto& [h, ch] : t_from_delta(n, g.i, g.j)) add_to(out, h, c * ch);
  }
  return out;
}

Linear substitute_delta(int n, const Linear& x) {
  Linear out;
  for (const auto& [g, c] : x) {
    if (g.kind == Generator::Kind::T) {
      add_to(out, g, c);
      continue;
    }
    for (const auto& [h, ch] : delta_from_t(n, g.i, g.j)) add_to(out, h, c * ch);
  }
  return out;
}

std::vector<BraidTensor> dihedral_relations(int n) {
  check_n(n);
  std::vector<BraidTensor> out;
  for (const auto& q : distinct_pairs(n)) {
    BraidTensor r = commutator(t_from_delta(n, q.i, q.j), t_from_delta(n, q.k, q.l));
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

namespace {

Span dihedral_span(int n) {
  auto basis = delta_basis(n);
  linalg::Matrix rows;
  for (const auto& r : dihedral_relations(n)) rows.push_back(wedge_row(r, basis));
  return Span(std::move(rows));
}

}  // namespace

int dihedral_span_dimension(int n) { return dihedral_span(n).dimension(); }

int commutator_span_dimension(int n) {
  check_n(n);
  auto basis = t_basis(n);
  linalg::Matrix rows = centre_rows(n, basis);
  const int centre = linalg::rank(rows);
  for (const auto& q : distinct_pairs(n))
    rows.push_back(wedge_row(commutator(single(Generator::t(q.i, q.j)), single(Generator::t(q.k, q.l))), basis));
  return linalg::rank(std::move(rows)) - centre;
}

bool relation_span_equivalence(int n) {
  check_n(n);
  auto basis = t_basis(n);
  linalg::Matrix centre = centre_rows(n, basis);
  linalg::Matrix with_t = centre, with_delta = centre;
  for (const auto& q : distinct_pairs(n))
    with_t.push_back(wedge_row(commutator(single(Generator::t(q.i, q.j)), single(Generator::t(q.k, q.l))), basis));
  for (const auto& r : dihedral_relations(n)) with_delta.push_back(wedge_row(map_tensor(r, n, true), basis));
  linalg::Matrix both = with_t;
  both.insert(both.end(), with_delta.begin() + static_cast<long>(centre.size()), with_delta.end());
  const int rt = linalg::rank(with_t), rd = linalg::rank(with_delta), rb = linalg::rank(both);
  return rt == rd && rd == rb;
}

bool noncrossing_commutators_in_span(int n) {
  Span span = dihedral_span(n);
  ngon::DihedralNGon g(n);
  auto cs = ngon::chords(g);
  auto basis = delta_basis(n);
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      if (ngon::crosses(cs[a], cs[b], g)) continue;
      BraidTensor x = commutator(single(Generator::delta(cs[a].i, cs[a].j)), single(Generator::delta(cs[b].i, cs[b].j)));
      if (!span.contains(wedge_row(x, basis))) return false;
    }
  return true;
}

bool in_dihedral_span(int n, const BraidTensor& x) {
  return dihedral_span(n).contains(wedge_row(x, delta_basis(n)));
}

BraidTensor five_term_element() {
  const int seq[5][2] = {{1, 3}, {2, 4}, {3, 5}, {4, 1}, {5, 2}};
  BraidTensor out;
  for (int k = 0; k < 5; ++k) {
    const auto& p = seq[k];
    const auto& q = seq[(k + 1) % 5];
    out = out + commutator(single(Generator::delta(p[0], p[1])), single(Generator::delta(q[0], q[1])));
  }
  return out;
}

}  // namespace periods::braid
