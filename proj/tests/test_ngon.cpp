#include <doctest.h>

#include "periods/ngon.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace periods;
using namespace periods::ngon;

using testing::all_pairs_nonadjacent;
using testing::brute_triangulations;
using testing::catalan;
using testing::interleave;

TEST_CASE("chords of the n-gon") {
  for (int n = 4; n <= 10; ++n) {
    DihedralNGon g(n);
    CHECK(static_cast<int>(chords(g).size()) == n * (n - 3) / 2);
    CHECK(chords(g) == all_pairs_nonadjacent(n));
  }
  DihedralNGon g(5);
  CHECK(make_chord(g, 6, 3) == Chord(1, 3));
  CHECK_THROWS(make_chord(g, 1, 2));
  CHECK_THROWS(make_chord(g, 5, 1));
  CHECK(!is_chord(g, 2, 2));
}

TEST_CASE("crossing agrees with interleaving") {
  for (int n = 4; n <= 8; ++n) {
    DihedralNGon g(n);
    for (const auto& a : chords(g))
      for (const auto& b : chords(g)) CHECK(crosses(a, b, g) == interleave(a, b));
  }
}

TEST_CASE("triangulation counts are Catalan numbers") {
  for (int n = 4; n <= 10; ++n) {
    DihedralNGon g(n);
    const long expected = catalan(n - 2);
    CHECK(brute_triangulations(n) == expected);
    CHECK(static_cast<long>(enumerate_partial_triangulations(g, n - 3).size()) == expected);
  }
}

TEST_CASE("partial triangulations are non-crossing and complete") {
  for (int n = 5; n <= 8; ++n) {
    DihedralNGon g(n);
    for (int k = 1; k <= n - 3; ++k)
      for (const auto& s : enumerate_partial_triangulations(g, k)) {
        CHECK(static_cast<int>(s.size()) == k);
        CHECK(non_crossing(s, g));
      }
    // k = 1: every chord; k = 2: non-crossing pairs.
    CHECK(enumerate_partial_triangulations(g, 1).size() == chords(g).size());
  }
}

TEST_CASE("cutting along a chord") {
  DihedralNGon g(7);
  auto [p, q] = cut_along_chord(g, Chord(2, 5));
  CHECK(p.size() + q.size() == 7 + 2);
  CHECK(std::min(p.size(), q.size()) == 4);
  // A full triangulation cuts the polygon into n-2 triangles.
  for (const auto& t : enumerate_partial_triangulations(g, 4)) {
    auto pieces = decompose(g, t);
    CHECK(pieces.size() == 5);
    for (const auto& piece : pieces) CHECK(piece.size() == 3);
  }
}

TEST_CASE("stable partitions") {
  for (int n = 4; n <= 8; ++n) {
    DihedralNGon g(n);
    auto parts = enumerate_stable_partitions(g);
    CHECK(static_cast<long>(parts.size()) == (1L << (n - 1)) - 1 - n);
    int from_chords = 0;
    for (const auto& p : parts) {
      CHECK(p.block1.size() >= 2);
      CHECK(p.block2.size() >= 2);
      CHECK(p.block1.count(1) == 1);
      if (chord_of_partition(g, p)) ++from_chords;
    }
    CHECK(from_chords == n * (n - 3) / 2);
    for (const auto& c : chords(g)) CHECK(chord_of_partition(g, stable_partition_of_chord(g, c)) == c);
  }
}

TEST_CASE("forgetful pullback inverts contraction") {
  DihedralNGon g(7);
  const std::vector<int> T{1, 2, 4, 5, 7};
  DihedralNGon h(5);
  for (const auto& c : chords(h)) {
    ChordSet pulled = forgetful_pullback(g, T, c);
    for (const auto& d : chords(g)) {
      auto image = forget_chord(g, T, d);
      CHECK((image && *image == c) == (pulled.count(d) == 1));
    }
  }
}

TEST_CASE("dihedral group") {
  for (int n = 4; n <= 8; ++n) {
    DihedralNGon g(n);
    auto group = dihedral_group(g);
    CHECK(static_cast<int>(group.size()) == 2 * n);
    for (const auto& s : group)
      for (const auto& a : chords(g))
        for (const auto& b : chords(g)) CHECK(crosses(s.apply(g, a), s.apply(g, b), g) == crosses(a, b, g));
  }
}
