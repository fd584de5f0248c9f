#include "periods/words.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "periods/error.hpp"

namespace periods::words {

Word::Word(std::initializer_list<int> letters) {
  for (int a : letters) push_back(static_cast<Letter>(a));
}

Word::Word(const std::vector<int>& letters) {
  for (int a : letters) push_back(static_cast<Letter>(a));
}

void Word::push_back(Letter a) {
  if (size_ >= kCapacity) throw Error(ErrorCode::BudgetExceeded, "word length cap exceeded");
  data_[size_++] = a;
}

void Word::push_front(Letter a) {
  if (size_ >= kCapacity) throw Error(ErrorCode::BudgetExceeded, "word length cap exceeded");
  std::copy_backward(data_.begin(), data_.begin() + size_, data_.begin() + size_ + 1);
  data_[0] = a;
  ++size_;
}

Word Word::slice(std::size_t from, std::size_t to) const {
  Word w;
  for (std::size_t i = from; i < to && i < size_; ++i) w.data_[w.size_++] = data_[i];
  return w;
}

Word Word::without(std::size_t position) const {
  Word w;
  for (std::size_t i = 0; i < size_; ++i)
    if (i != position) w.data_[w.size_++] = data_[i];
  return w;
}

Word Word::inserted(std::size_t position, Letter a) const {
  Word w;
  for (std::size_t i = 0; i <= size_; ++i) {
    if (i == position) w.push_back(a);
    if (i < size_) w.push_back(data_[i]);
  }
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.data_.begin(), w.data_.begin() + size_);
  return w;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  for (Letter a : other) w.push_back(a);
  return w;
}

std::size_t Word::count(Letter a) const { return std::count(begin(), end(), a); }

std::vector<int> Word::to_vector() const { return std::vector<int>(begin(), end()); }

std::string Word::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < size_; ++i) os << (i ? "," : "") << int(data_[i]);
  os << ']';
  return os.str();
}

bool operator==(const Word& a, const Word& b) {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word repeat(Letter a, std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(a);
  return w;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull ^ w.size();
  for (Letter a : w) h = (h ^ a) * 1099511628211ull;
  return h;
}

void add_term(WordCombination& c, const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = c.try_emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) c.erase(it);
  }
}

void add_scaled(WordCombination& into, const WordCombination& c, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [w, q] : c) add_term(into, w, q * scale);
}

WordCombination scaled(const WordCombination& c, const Rational& s) {
  WordCombination out;
  add_scaled(out, c, s);
  return out;
}

WordCombination shuffle(const Word& u, const Word& v) {
  WordCombination out;
  const std::size_t a = u.size(), b = v.size(), n = a + b;
  if (n > Word::kCapacity) throw Error(ErrorCode::BudgetExceeded, "shuffle exceeds word length cap");
  if (a == 0 || b == 0) {
    out.emplace(a ? u : v, 1);
    return out;
  }
  // Enumerate the positions taken by u as n-bit masks with a bits set.
  std::uint32_t mask = (1u << a) - 1;
  const std::uint32_t limit = 1u << n;
  std::unordered_map<Word, unsigned, WordHash> counts;
  while (mask < limit) {
    Word w;
    std::size_t iu = 0, iv = 0;
    for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1u ? u[iu++] : v[iv++]);
    ++counts[w];
    std::uint32_t c = mask & -mask, r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  for (auto& [w, k] : counts) out.emplace(w, k);
  return out;
}

WordCombination shuffle(const WordCombination& u, const WordCombination& v) {
  WordCombination out;
  for (const auto& [wu, qu] : u)
    for (const auto& [wv, qv] : v) add_scaled(out, shuffle(wu, wv), qu * qv);
  return out;
}

std::optional<Word> truncate_left(Letter a, const Word& w) {
  if (w.empty() || w.front() != a) return std::nullopt;
  return w.slice(1, w.size());
}

WordCombination truncate_left(Letter a, const WordCombination& c) {
  WordCombination out;
  for (const auto& [w, q] : c)
    if (auto t = truncate_left(a, w)) add_term(out, *t, q);
  return out;
}

namespace {

using Split = std::map<int, WordCombination>;

void add_split(Split& into, const Split& s, const Rational& scale, int shift) {
  for (const auto& [j, comb] : s) {
    Rational f = scale;
    // u sh a^j sh a = (j+1) u sh a^(j+1)
    for (int k = 1; k <= shift; ++k) f *= j + k;
    auto& target = into[j + shift];
    add_scaled(target, comb, f);
    if (target.empty()) into.erase(j + shift);
  }
}

Split split_trailing_impl(Letter a, const Word& w,
                          std::unordered_map<Word, Split, WordHash>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::size_t p = 0;
  while (p < w.size() && w[w.size() - 1 - p] == a) ++p;
  Split out;
  if (p == 0) {
    out[0].emplace(w, 1);
  } else {
    // w' sh a = p w + sum_i v^(i) a^(p-1), where v^(i) inserts a into v = w minus its trailing block.
    const Word shorter = w.slice(0, w.size() - 1);
    const Word v = w.slice(0, w.size() - p);
    const Rational inv_p(1, static_cast<long>(p));
    add_split(out, split_trailing_impl(a, shorter, memo), inv_p, 1);
    const Word tail = repeat(a, p - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      add_split(out, split_trailing_impl(a, v.inserted(i, a) + tail, memo), -inv_p, 0);
  }
  memo.emplace(w, out);
  return out;
}

}  // namespace

std::map<int, WordCombination> split_trailing(Letter a, const Word& w) {
  static thread_local std::map<Letter, std::unordered_map<Word, Split, WordHash>> memo;
  return split_trailing_impl(a, w, memo[a]);
}

std::map<int, WordCombination> split_leading(Letter a, const Word& w) {
  std::map<int, WordCombination> out;
  for (const auto& [j, comb] : split_trailing(a, w.reversed())) {
    auto& target = out[j];
    for (const auto& [u, q] : comb) target.emplace(u.reversed(), q);
  }
  return out;
}

int weight(const CompositionWord& c) {
  int s = 0;
  for (int p : c) s += p;
  return s;
}

namespace {

void stuffle_rec(const CompositionWord& u, std::size_t iu, const CompositionWord& v, std::size_t iv,
                 CompositionWord& prefix, CompositionCombination& out) {
  if (iu == u.size() || iv == v.size()) {
    CompositionWord w = prefix;
    w.insert(w.end(), u.begin() + iu, u.end());
    w.insert(w.end(), v.begin() + iv, v.end());
    out[w] += 1;
    return;
  }
  prefix.push_back(u[iu]);
  stuffle_rec(u, iu + 1, v, iv, prefix, out);
  prefix.back() = v[iv];
  stuffle_rec(u, iu, v, iv + 1, prefix, out);
  prefix.back() = u[iu] + v[iv];
  stuffle_rec(u, iu + 1, v, iv + 1, prefix, out);
  prefix.pop_back();
}

}  // namespace

CompositionCombination stuffle(const CompositionWord& u, const CompositionWord& v) {
  for (int p : u)
    if (p < 1) throw Error(ErrorCode::InvalidInput, "composition parts must be positive");
  for (int p : v)
    if (p < 1) throw Error(ErrorCode::InvalidInput, "composition parts must be positive");
  CompositionCombination out;
  CompositionWord prefix;
  stuffle_rec(u, 0, v, 0, prefix, out);
  return out;
}

}  // namespace periods::words
