#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "periods/rational.hpp"

namespace periods::words {

using Letter = std::uint8_t;

/// Finite word over small integer letters, stored inline.
class Word {
 public:
  static constexpr std::size_t kCapacity = 23;

  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(const std::vector<int>& letters);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Letter operator[](std::size_t i) const { return data_[i]; }
  Letter front() const { return data_[0]; }
  Letter back() const { return data_[size_ - 1]; }
  const Letter* begin() const { return data_.data(); }
  const Letter* end() const { return data_.data() + size_; }

  void push_back(Letter a);
  void push_front(Letter a);
  void pop_back() { --size_; }

  Word slice(std::size_t from, std::size_t to) const;
  Word without(std::size_t position) const;
  Word inserted(std::size_t position, Letter a) const;
  Word reversed() const;
  Word operator+(const Word& other) const;

  std::size_t count(Letter a) const;
  std::vector<int> to_vector() const;
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b);
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::array<Letter, kCapacity> data_{};
  std::uint8_t size_ = 0;
};

Word repeat(Letter a, std::size_t n);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Sparse rational combination; zero coefficients are never stored.
using WordCombination = std::map<Word, Rational>;

void add_term(WordCombination& c, const Word& w, const Rational& coeff);
void add_scaled(WordCombination& into, const WordCombination& c, const Rational& scale);
WordCombination scaled(const WordCombination& c, const Rational& s);

WordCombination shuffle(const Word& u, const Word& v);
WordCombination shuffle(const WordCombination& u, const WordCombination& v);

/// Left truncation: a w -> w, zero otherwise.
std::optional<Word> truncate_left(Letter a, const Word& w);
WordCombination truncate_left(Letter a, const WordCombination& c);

/// Writes w = sum_j u_j sh a^j with no u_j ending in a; returns j -> u_j.
std::map<int, WordCombination> split_trailing(Letter a, const Word& w);
/// Writes w = sum_j a^j sh u_j with no u_j starting in a.
std::map<int, WordCombination> split_leading(Letter a, const Word& w);

using CompositionWord = std::vector<int>;
using CompositionCombination = std::map<CompositionWord, Rational>;

int weight(const CompositionWord& c);
CompositionCombination stuffle(const CompositionWord& u, const CompositionWord& v);

}  // namespace periods::words
