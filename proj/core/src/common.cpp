#include "periods/error.hpp"
#include "periods/rational.hpp"

#include <cctype>

namespace periods {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::NonConvergent: return "NON_CONVERGENT";
    case ErrorCode::PoleRequired: return "POLE_REQUIRED";
    case ErrorCode::LogDivergence: return "LOG_DIVERGENCE";
    case ErrorCode::DivergentRestriction: return "DIVERGENT_RESTRICTION";
    case ErrorCode::InternalDivergence: return "INTERNAL_DIVERGENCE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::PrecisionUnattainable: return "PRECISION_UNATTAINABLE";
  }
  return "UNKNOWN";
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw Error(ErrorCode::InvalidInput, "empty rational");
  std::size_t slash = t.find('/');
  auto digits_ok = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + text + "'");
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // (-1)^k binom(k-n-1, k)
  Integer r = binomial(k - n - 1, k);
  return (k % 2) ? Integer(-r) : r;
}

}  // namespace periods
