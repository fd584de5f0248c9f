#include "periods/mzv.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "linalg.hpp"
#include "periods/error.hpp"

namespace periods::mzv {

bool is_admissible(const Word& w) { return !w.empty() && w.front() == X0 && w.back() == X1; }

namespace {

CompositionWord composition_of(const Word& w) {
  if (w.empty() || w.back() != X1) throw Error(ErrorCode::InvalidInput, "word must end in x1: " + w.str());
  CompositionWord rev;
  int zeros = 0;
  for (auto a : w) {
    if (a == X0) {
      ++zeros;
    } else if (a == X1) {
      rev.push_back(zeros + 1);
      zeros = 0;
    } else {
      throw Error(ErrorCode::InvalidInput, "letters must be x0/x1");
    }
  }
  return CompositionWord(rev.rbegin(), rev.rend());
}

Word word_of(const CompositionWord& c) {
  Word w;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (*it < 1) throw Error(ErrorCode::InvalidInput, "composition parts must be positive");
    for (int k = 1; k < *it; ++k) w.push_back(X0);
    w.push_back(X1);
  }
  return w;
}

std::string composition_text(const CompositionWord& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

}  // namespace

CompositionWord word_to_composition(const Word& w) {
  if (!is_admissible(w)) throw Error(ErrorCode::InvalidInput, "non-admissible MZV word " + w.str());
  return composition_of(w);
}

Word composition_to_word(const CompositionWord& c) {
  if (c.empty() || c.back() < 2) throw Error(ErrorCode::InvalidInput, "composition must end with a part >= 2");
  return word_of(c);
}

MzvCombination MzvCombination::zeta(const Word& admissible, const Rational& c) {
  if (!is_admissible(admissible)) throw Error(ErrorCode::InvalidInput, "non-admissible MZV word " + admissible.str());
  MzvCombination m;
  m.add(admissible, c);
  return m;
}

MzvCombination MzvCombination::zeta(const CompositionWord& c, const Rational& coeff) {
  return zeta(composition_to_word(c), coeff);
}

int MzvCombination::weight() const {
  int w = 0;
  for (const auto& [word, c] : terms_) w = std::max(w, static_cast<int>(word.size()));
  return w;
}

void MzvCombination::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (w.empty()) {
    constant_ += c;
    return;
  }
  if (!is_admissible(w)) throw Error(ErrorCode::InvalidInput, "non-admissible MZV word " + w.str());
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MzvCombination MzvCombination::operator+(const MzvCombination& o) const {
  MzvCombination r = *this;
  r.constant_ += o.constant_;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

MzvCombination MzvCombination::operator-(const MzvCombination& o) const { return *this + (-o); }

MzvCombination MzvCombination::operator*(const Rational& c) const {
  MzvCombination r;
  if (c == 0) return r;
  r.constant_ = constant_ * c;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

MzvCombination MzvCombination::operator*(const MzvCombination& o) const {
  MzvCombination r;
  r.constant_ = constant_ * o.constant_;
  if (constant_ != 0)
    for (const auto& [w, c] : o.terms_) r.add(w, c * constant_);
  if (o.constant_ != 0)
    for (const auto& [w, c] : terms_) r.add(w, c * o.constant_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_)
      for (const auto& [w, c] : words::shuffle(u, v)) r.add(w, c * cu * cv);
  return r;
}

std::string MzvCombination::str() const {
  if (is_zero()) return "0";
  std::vector<std::pair<CompositionWord, Rational>> items;
  for (const auto& [w, c] : terms_) items.emplace_back(composition_of(w), c);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int wa = words::weight(a.first), wb = words::weight(b.first);
    if (wa != wb) return wa > wb;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  auto emit = [&](Rational c, const std::string& body) {
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (body.empty())
      os << c.get_str();
    else if (c == 1)
      os << body;
    else
      os << c.get_str() << '*' << body;
    first = false;
  };
  for (const auto& [comp, c] : items) emit(c, "z(" + composition_text(comp) + ")");
  if (constant_ != 0) emit(constant_, "");
  return os.str();
}

MzvCombination parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  MzvCombination out;
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty MZV expression");
  if (s == "0") return out;
  std::size_t pos = 0;
  auto fail = [&]() { throw Error(ErrorCode::InvalidInput, "cannot parse MZV expression '" + text + "'"); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    Rational coeff = 1;
    bool have_number = false;
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos > start) {
      coeff = parse_rational(s.substr(start, pos - start));
      have_number = true;
    }
    if (pos < s.size() && s[pos] == '*') {
      if (!have_number) fail();
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'z') {
      if (pos + 1 >= s.size() || s[pos + 1] != '(') fail();
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) fail();
      CompositionWord comp;
      std::stringstream parts(s.substr(pos + 2, close - pos - 2));
      std::string item;
      while (std::getline(parts, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          fail();
        comp.push_back(std::stoi(item));
      }
      out += MzvCombination::zeta(comp, coeff * sign);
      pos = close + 1;
    } else {
      if (!have_number) fail();
      out += MzvCombination(coeff * sign);
    }
  }
  return out;
}

MzvCombination shuffle_regularize(const Word& w) {
  MzvCombination out;
  auto lead = words::split_leading(X1, w);
  auto it = lead.find(0);
  if (it == lead.end()) return out;
  for (const auto& [u, cu] : it->second) {
    auto trail = words::split_trailing(X0, u);
    auto jt = trail.find(0);
    if (jt == trail.end()) continue;
    for (const auto& [v, cv] : jt->second) out.add(v, cu * cv);
  }
  return out;
}

MzvCombination shuffle_regularize(const words::WordCombination& c) {
  MzvCombination out;
  for (const auto& [w, k] : c) out += shuffle_regularize(w) * k;
  return out;
}

MzvCombination stuffle_product(const Word& u, const Word& v) {
  MzvCombination out;
  for (const auto& [comp, c] : words::stuffle(word_to_composition(u), word_to_composition(v)))
    out.add(composition_to_word(comp), c);
  return out;
}

std::vector<Word> admissible_words(int weight) {
  std::vector<Word> out;
  if (weight < 2) return out;
  const int free = weight - 2;
  for (unsigned mask = 0; mask < (1u << free); ++mask) {
    Word w;
    w.push_back(X0);
    for (int b = free - 1; b >= 0; --b) w.push_back((mask >> b) & 1u ? X1 : X0);
    w.push_back(X1);
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MzvCombination> double_shuffle_relations(int weight) {
  if (weight < 2 || weight > 8) throw Error(ErrorCode::InvalidInput, "double shuffle weight must lie in 2..8");
  std::vector<MzvCombination> out;
  for (int p = 2; 2 * p <= weight; ++p) {
    int q = weight - p;
    if (q < 2) continue;
    for (const Word& u : admissible_words(p))
      for (const Word& v : admissible_words(q)) {
        if (p == q && v < u) continue;
        MzvCombination sh;
        for (const auto& [w, c] : words::shuffle(u, v)) sh.add(w, c);
        MzvCombination rel = sh - stuffle_product(u, v);
        if (!rel.is_zero()) out.push_back(rel);
      }
  }
  return out;
}

std::vector<MzvCombination> hoffman_relations(int weight) {
  std::vector<MzvCombination> out;
  Word x1{X1};
  for (const Word& v : admissible_words(weight - 1)) {
    words::WordCombination diff = words::shuffle(x1, v);
    for (const auto& [comp, c] : words::stuffle(CompositionWord{1}, word_to_composition(v)))
      words::add_term(diff, word_of(comp), -c);
    MzvCombination rel;
    for (const auto& [w, c] : diff) {
      if (!is_admissible(w)) throw Error(ErrorCode::InternalDivergence, "Hoffman relation left a divergent word");
      rel.add(w, c);
    }
    if (!rel.is_zero()) out.push_back(rel);
  }
  return out;
}

namespace {

struct Reducer {
  std::vector<Word> columns;
  linalg::Matrix rows;
  std::vector<int> pivots;
};

const Reducer& reducer(int weight) {
  static std::mutex mu;
  static std::map<int, Reducer> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(weight);
  if (it != cache.end()) return it->second;
  Reducer r;
  r.columns = admissible_words(weight);
  std::stable_sort(r.columns.begin(), r.columns.end(), [](const Word& a, const Word& b) {
    return a.count(X1) > b.count(X1);
  });
  std::vector<MzvCombination> rels = double_shuffle_relations(weight);
  for (auto& h : hoffman_relations(weight)) rels.push_back(h);
  for (const auto& rel : rels) {
    linalg::Row row(r.columns.size(), 0);
    for (const auto& [w, c] : rel.terms()) {
      auto pos = std::find(r.columns.begin(), r.columns.end(), w) - r.columns.begin();
      row[pos] = c;
    }
    r.rows.push_back(row);
  }
  r.pivots = linalg::rref(r.rows);
  r.rows.resize(r.pivots.size());
  return cache.emplace(weight, std::move(r)).first->second;
}

}  // namespace

MzvCombination reduce(const MzvCombination& c, int max_weight) {
  MzvCombination out(c.constant());
  std::map<int, std::map<Word, Rational>> by_weight;
  for (const auto& [w, k] : c.terms()) by_weight[static_cast<int>(w.size())][w] = k;
  for (auto& [wt, terms] : by_weight) {
    if (wt < 2 || wt > max_weight) {
      for (const auto& [w, k] : terms) out.add(w, k);
      continue;
    }
    const Reducer& r = reducer(wt);
    std::vector<Rational> vec(r.columns.size(), 0);
    for (const auto& [w, k] : terms) vec[std::find(r.columns.begin(), r.columns.end(), w) - r.columns.begin()] = k;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      Rational f = vec[r.pivots[i]];
      if (f == 0) continue;
      for (std::size_t col = 0; col < vec.size(); ++col)
        if (r.rows[i][col] != 0) vec[col] -= f * r.rows[i][col];
    }
    for (std::size_t col = 0; col < vec.size(); ++col) out.add(r.columns[col], vec[col]);
  }
  return out;
}

}  // namespace periods::mzv
