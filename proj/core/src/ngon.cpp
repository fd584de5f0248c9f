#include "periods/ngon.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "periods/error.hpp"

namespace periods::ngon {

DihedralNGon::DihedralNGon(int n) : n_(n) {
  if (n < 4) throw Error(ErrorCode::InvalidInput, "n-gon needs n >= 4");
}

bool DihedralNGon::adjacent(int i, int j) const {
  i = wrap(i);
  j = wrap(j);
  return wrap(i + 1) == j || wrap(j + 1) == i;
}

std::string Chord::str() const { return std::to_string(i) + "," + std::to_string(j); }

bool is_chord(const DihedralNGon& g, int a, int b) {
  a = g.wrap(a);
  b = g.wrap(b);
  return a != b && !g.adjacent(a, b);
}

Chord make_chord(const DihedralNGon& g, int a, int b) {
  if (!is_chord(g, a, b))
    throw Error(ErrorCode::InvalidInput,
                "{" + std::to_string(a) + "," + std::to_string(b) + "} is not a chord for n=" +
                    std::to_string(g.n()));
  return Chord(g.wrap(a), g.wrap(b));
}

std::vector<Chord> chords(const DihedralNGon& g) {
  std::vector<Chord> out;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 2; j <= g.n(); ++j)
      if (!g.adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

bool crosses(const Chord& a, const Chord& b, const DihedralNGon&) {
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  bool k_inside = a.i < b.i && b.i < a.j;
  bool l_inside = a.i < b.j && b.j < a.j;
  return k_inside != l_inside;
}

ChordSet crossing_set(const Chord& a, const DihedralNGon& g) {
  ChordSet out;
  for (const Chord& b : chords(g))
    if (crosses(a, b, g)) out.insert(b);
  return out;
}

bool crosses_completely(const ChordSet& a, const ChordSet& b, const DihedralNGon& g) {
  for (const Chord& x : a)
    for (const Chord& y : b)
      if (!crosses(x, y, g)) return false;
  return true;
}

bool non_crossing(const ChordSet& s, const DihedralNGon& g) {
  for (auto it = s.begin(); it != s.end(); ++it)
    for (auto jt = std::next(it); jt != s.end(); ++jt)
      if (crosses(*it, *jt, g)) return false;
  return true;
}

std::vector<ChordSet> enumerate_partial_triangulations(const DihedralNGon& g, int k) {
  if (k < 1 || k > g.ell())
    throw Error(ErrorCode::InvalidInput, "k must lie in 1..n-3");
  const std::vector<Chord> all = chords(g);
  std::vector<ChordSet> out;
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) {
      ChordSet s;
      for (int idx : chosen) s.insert(all[idx]);
      out.push_back(std::move(s));
      return;
    }
    for (std::size_t c = start; c < all.size(); ++c) {
      bool ok = true;
      for (int idx : chosen)
        if (crosses(all[idx], all[c], g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(c));
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

Piece whole(const DihedralNGon& g) {
  Piece p;
  for (int v = 1; v <= g.n(); ++v) {
    p.vertices.push_back(v);
    p.edges.push_back(g.wrap(v + 1));
  }
  return p;
}

std::pair<Piece, Piece> cut_along_chord(const Piece& p, const Chord& a) {
  const int m = p.size();
  auto pos = [&](int v) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    if (it == p.vertices.end())
      throw Error(ErrorCode::InvalidInput, "chord {" + a.str() + "} does not lie in the piece");
    return static_cast<int>(it - p.vertices.begin());
  };
  int s = pos(a.i), t = pos(a.j);
  if (s > t) std::swap(s, t);
  if (t - s < 2 || t - s > m - 2)
    throw Error(ErrorCode::InvalidInput, "chord {" + a.str() + "} joins adjacent vertices of the piece");
  Piece first, second;
  for (int r = s; r <= t; ++r) {
    first.vertices.push_back(p.vertices[r]);
    first.edges.push_back(r < t ? p.edges[r] : 0);
  }
  for (int r = t; r != s + m; ++r) {
    second.vertices.push_back(p.vertices[r % m]);
    second.edges.push_back(p.edges[r % m]);
  }
  second.vertices.push_back(p.vertices[s]);
  second.edges.push_back(0);
  return {first, second};
}

std::pair<Piece, Piece> cut_along_chord(const DihedralNGon& g, const Chord& a) {
  make_chord(g, a.i, a.j);
  return cut_along_chord(whole(g), a);
}

std::vector<Piece> decompose(const DihedralNGon& g, const ChordSet& alpha) {
  if (!non_crossing(alpha, g)) throw Error(ErrorCode::InvalidInput, "chord set has crossings");
  std::vector<Piece> pieces{whole(g)};
  for (const Chord& c : alpha) {
    for (std::size_t r = 0; r < pieces.size(); ++r) {
      const auto& vs = pieces[r].vertices;
      if (std::count(vs.begin(), vs.end(), c.i) && std::count(vs.begin(), vs.end(), c.j)) {
        auto [a, b] = cut_along_chord(pieces[r], c);
        pieces[r] = a;
        pieces.push_back(b);
        break;
      }
    }
  }
  return pieces;
}

std::vector<Chord> piece_chords(const Piece& p) {
  std::vector<Chord> out;
  const int m = p.size();
  for (int s = 0; s < m; ++s)
    for (int t = s + 2; t < m; ++t)
      if (!(s == 0 && t == m - 1)) out.emplace_back(p.vertices[s], p.vertices[t]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_subset(const DihedralNGon& g, const std::vector<int>& T) {
  if (T.size() < 4) throw Error(ErrorCode::InvalidInput, "forgetful map needs |T| >= 4");
  for (std::size_t r = 0; r < T.size(); ++r) {
    if (T[r] < 1 || T[r] > g.n()) throw Error(ErrorCode::InvalidInput, "edge label out of range");
    if (r && T[r] <= T[r - 1]) throw Error(ErrorCode::InvalidInput, "T must be strictly increasing");
  }
}

}  // namespace

int forget_vertex(const DihedralNGon& g, const std::vector<int>& T, int a) {
  check_subset(g, T);
  a = g.wrap(a);
  // Largest T-edge <= a, cyclically.
  int best = -1;
  for (std::size_t r = 0; r < T.size(); ++r)
    if (T[r] <= a) best = static_cast<int>(r);
  if (best < 0) best = static_cast<int>(T.size()) - 1;
  return best + 1;
}

std::optional<Chord> forget_chord(const DihedralNGon& g, const std::vector<int>& T, const Chord& c) {
  const DihedralNGon small(static_cast<int>(T.size()));
  int a = forget_vertex(g, T, c.i), b = forget_vertex(g, T, c.j);
  if (!is_chord(small, a, b)) return std::nullopt;
  return Chord(a, b);
}

ChordSet forgetful_pullback(const DihedralNGon& g, const std::vector<int>& T, const Chord& c) {
  check_subset(g, T);
  const DihedralNGon small(static_cast<int>(T.size()));
  const Chord target = make_chord(small, c.i, c.j);
  ChordSet out;
  for (const Chord& d : chords(g))
    if (auto img = forget_chord(g, T, d); img && *img == target) out.insert(d);
  return out;
}

int StablePartition::same(int a, int b) const {
  return (block1.count(a) && block1.count(b)) || (block2.count(a) && block2.count(b)) ? 1 : 0;
}

std::string StablePartition::str() const {
  std::ostringstream os;
  auto put = [&](const std::set<int>& b) {
    os << '{';
    bool first = true;
    for (int x : b) {
      os << (first ? "" : ",") << x;
      first = false;
    }
    os << '}';
  };
  put(block1);
  os << '|';
  put(block2);
  return os.str();
}

StablePartition make_partition(const DihedralNGon& g, std::set<int> block) {
  StablePartition p;
  for (int x : block)
    if (x < 1 || x > g.n()) throw Error(ErrorCode::InvalidInput, "partition label out of range");
  std::set<int> rest;
  for (int x = 1; x <= g.n(); ++x)
    if (!block.count(x)) rest.insert(x);
  if (block.size() < 2 || rest.size() < 2)
    throw Error(ErrorCode::InvalidInput, "stable partition needs blocks of size >= 2");
  if (block.count(1)) {
    p.block1 = std::move(block);
    p.block2 = std::move(rest);
  } else {
    p.block1 = std::move(rest);
    p.block2 = std::move(block);
  }
  return p;
}

StablePartition stable_partition_of_chord(const DihedralNGon& g, const Chord& a) {
  make_chord(g, a.i, a.j);
  std::set<int> arc;
  for (int e = a.i + 1; e <= a.j; ++e) arc.insert(e);
  return make_partition(g, arc);
}

std::vector<StablePartition> enumerate_stable_partitions(const DihedralNGon& g) {
  std::vector<StablePartition> out;
  const int n = g.n();
  // Subsets containing 1, so each unordered partition appears once.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> block{1};
    for (int x = 2; x <= n; ++x)
      if (mask & (1u << (x - 2))) block.insert(x);
    int size = static_cast<int>(block.size());
    if (size < 2 || n - size < 2) continue;
    out.push_back(make_partition(g, block));
  }
  return out;
}

std::optional<Chord> chord_of_partition(const DihedralNGon& g, const StablePartition& p) {
  // block2 avoids 1; it is a cyclic interval iff it is an ordinary interval a..b.
  int a = *p.block2.begin(), b = *p.block2.rbegin();
  if (b - a + 1 == static_cast<int>(p.block2.size())) return make_chord(g, a - 1, b);
  return std::nullopt;
}

Chord Symmetry::apply(const DihedralNGon& g, const Chord& c) const {
  return Chord(apply(g, c.i), apply(g, c.j));
}

std::vector<Symmetry> dihedral_group(const DihedralNGon& g) {
  std::vector<Symmetry> out;
  for (int s : {1, -1})
    for (int c = 0; c < g.n(); ++c) out.push_back({s, c});
  return out;
}

}  // namespace periods::ngon
