#include <map>
#include <mutex>
#include <sstream>

#include "periods/error.hpp"
#include "periods/hyperlog.hpp"
#include "periods/mzv.hpp"

namespace periods::mzv {

namespace {

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : old_(BigFloat::default_precision()) { BigFloat::default_precision(digits); }
  ~PrecisionScope() { BigFloat::default_precision(old_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned old_;
};

int bits_for(unsigned digits) { return static_cast<int>(digits * 3.33) + 32; }

Word complement_reversed(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = k; i-- > 0;) out.push_back(w[i] == X0 ? X1 : X0);
  return out;
}

BigFloat zeta_uncached(const Word& w, unsigned digits) {
  const int bits = bits_for(digits);
  std::vector<BigFloat> sigma{BigFloat(0), BigFloat(1)};
  BigFloat half = BigFloat(1) / 2;
  BigFloat total = 0;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    BigFloat left = hyperlog::eval<BigFloat>(complement_reversed(w, k), sigma, half, bits);
    BigFloat right = hyperlog::eval<BigFloat>(w.slice(k, w.size()), sigma, half, bits);
    if (k % 2)
      total -= left * right;
    else
      total += left * right;
  }
  return w.count(X1) % 2 ? BigFloat(-total) : total;
}

std::mutex cache_mu;
std::map<std::pair<Word, unsigned>, std::string> cache;

}  // namespace

BigFloat zeta_value(const Word& w, unsigned digits) {
  if (!is_admissible(w)) throw Error(ErrorCode::InvalidInput, "non-admissible MZV word " + w.str());
  const unsigned work = digits + 20;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find({w, work});
    if (it != cache.end()) return BigFloat(it->second, digits + 20);
  }
  std::string text;
  {
    PrecisionScope scope(work);
    text = zeta_uncached(w, work).str(work + 5, std::ios::scientific);
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(std::make_pair(w, work), text);
  return BigFloat(text, work);
}

BigFloat eval_big(const MzvCombination& c, unsigned digits) {
  PrecisionScope scope(digits + 20);
  BigFloat total = to_real<BigFloat>(c.constant());
  for (const auto& [w, k] : c.terms()) total += to_real<BigFloat>(k) * zeta_value(w, digits);
  return total;
}

double eval_double(const MzvCombination& c) { return eval_big(c, 20).convert_to<double>(); }

NumericValue eval_numeric(const MzvCombination& c, int digits) {
  if (digits < 1 || digits > 100)
    throw Error(ErrorCode::PrecisionUnattainable, "requested digits must lie in 1..100");
  NumericValue out;
  PrecisionScope scope(digits + 20);
  out.value = eval_big(c, digits + 10);
  out.decimal = out.value.str(digits, std::ios::fixed);
  Rational mass = abs(c.constant());
  for (const auto& [w, k] : c.terms()) mass += abs(k);
  BigFloat bound = to_real<BigFloat>(mass + 1) * pow(BigFloat(10), -(digits + 8));
  out.error_bound = bound.str(3, std::ios::scientific);
  return out;
}

namespace {

/// B_0..B_m via the Akiyama-Tanigawa algorithm.
std::vector<Rational> bernoulli(int m) {
  std::vector<Rational> a(m + 1), b(m + 1);
  for (int k = 0; k <= m; ++k) {
    a[k] = Rational(1, k + 1);
    for (int j = k; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    b[k] = a[0];
  }
  if (m >= 1) b[1] = Rational(-1, 2);
  return b;
}

}  // namespace

BigFloat zeta_single_euler_maclaurin(int s, unsigned digits) {
  if (s < 2) throw Error(ErrorCode::InvalidInput, "zeta(s) needs s >= 2");
  PrecisionScope scope(digits + 20);
  const int N = static_cast<int>(digits) + 10;
  const int p = N / 2 + 2;
  static std::mutex mu;
  static std::vector<Rational> B;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(B.size()) < 2 * p + 1) B = bernoulli(2 * p);
  }
  BigFloat total = 0;
  for (int k = 1; k < N; ++k) total += pow(BigFloat(k), -s);
  BigFloat bn = BigFloat(N);
  total += pow(bn, 1 - s) / (s - 1) + pow(bn, -s) / 2;
  // B_2j/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
  BigFloat rising = s;
  BigFloat fact = 2;
  for (int j = 1; j <= p; ++j) {
    total += to_real<BigFloat>(B[2 * j]) / fact * rising * pow(bn, -s - 2 * j + 1);
    rising *= BigFloat(s + 2 * j - 1) * (s + 2 * j);
    fact *= BigFloat(2 * j + 1) * (2 * j + 2);
  }
  return total;
}

bool numerically_equal(const MzvCombination& a, const MzvCombination& b, int digits) {
  PrecisionScope scope(digits + 20);
  BigFloat d = eval_big(a - b, digits + 5);
  return abs(d) < pow(BigFloat(10), -digits);
}

}  // namespace periods::mzv
