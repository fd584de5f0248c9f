#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace periods::ngon {

/// n-gon with edges 1..n in cyclic order; vertex i sits between edges i and i+1.
class DihedralNGon {
 public:
  explicit DihedralNGon(int n);
  int n() const { return n_; }
  int ell() const { return n_ - 3; }
  /// Maps any integer to 1..n.
  int wrap(int i) const { return ((i - 1) % n_ + n_) % n_ + 1; }
  bool adjacent(int i, int j) const;

 private:
  int n_;
};

/// Unordered chord, stored with i < j.
struct Chord {
  int i = 0;
  int j = 0;
  Chord() = default;
  Chord(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}
  friend auto operator<=>(const Chord&, const Chord&) = default;
  std::string str() const;
};

/// Validates and canonicalizes a chord of g (labels taken mod n).
Chord make_chord(const DihedralNGon& g, int a, int b);
bool is_chord(const DihedralNGon& g, int a, int b);

using ChordSet = std::set<Chord>;

std::vector<Chord> chords(const DihedralNGon& g);
bool crosses(const Chord& a, const Chord& b, const DihedralNGon& g);
ChordSet crossing_set(const Chord& a, const DihedralNGon& g);
bool crosses_completely(const ChordSet& a, const ChordSet& b, const DihedralNGon& g);
bool non_crossing(const ChordSet& s, const DihedralNGon& g);

/// All sets of k pairwise non-crossing chords, lexicographic on sorted chord lists.
std::vector<ChordSet> enumerate_partial_triangulations(const DihedralNGon& g, int k);

/// A polygon obtained by cutting: cyclic list of original vertices and edge labels.
/// edges[r] joins vertices[r] and vertices[r+1]; label 0 marks a cut edge.
struct Piece {
  std::vector<int> vertices;
  std::vector<int> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

Piece whole(const DihedralNGon& g);
std::pair<Piece, Piece> cut_along_chord(const DihedralNGon& g, const Chord& a);
std::pair<Piece, Piece> cut_along_chord(const Piece& p, const Chord& a);
/// Iterated cutting along a non-crossing chord set.
std::vector<Piece> decompose(const DihedralNGon& g, const ChordSet& alpha);
/// Chords of a piece, expressed in original vertex labels.
std::vector<Chord> piece_chords(const Piece& p);

/// Vertex of the contracted T-gon (1..|T|) receiving vertex a of g.
int forget_vertex(const DihedralNGon& g, const std::vector<int>& T, int a);
/// Image of a chord under contraction onto T, or nullopt if it degenerates.
std::optional<Chord> forget_chord(const DihedralNGon& g, const std::vector<int>& T, const Chord& c);
/// Chords of g whose contraction is c; c is labelled by positions in the sorted T-gon.
ChordSet forgetful_pullback(const DihedralNGon& g, const std::vector<int>& T, const Chord& c);

struct StablePartition {
  std::set<int> block1;
  std::set<int> block2;
  /// Same block indicator.
  int same(int a, int b) const;
  std::string str() const;
  friend bool operator==(const StablePartition&, const StablePartition&) = default;
};

/// Canonical form: the block containing 1 comes first.
StablePartition make_partition(const DihedralNGon& g, std::set<int> block);
StablePartition stable_partition_of_chord(const DihedralNGon& g, const Chord& a);
std::vector<StablePartition> enumerate_stable_partitions(const DihedralNGon& g);
/// The chord whose partition this is, if both blocks are cyclic intervals.
std::optional<Chord> chord_of_partition(const DihedralNGon& g, const StablePartition& p);

/// Dihedral symmetry acting on vertices as v -> sign*v + shift (mod n).
struct Symmetry {
  int sign = 1;
  int shift = 0;
  int apply(const DihedralNGon& g, int v) const { return g.wrap(sign * v + shift); }
  Chord apply(const DihedralNGon& g, const Chord& c) const;
};
std::vector<Symmetry> dihedral_group(const DihedralNGon& g);

}  // namespace periods::ngon
