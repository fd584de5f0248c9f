#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "periods/dihedral.hpp"
#include "periods/error.hpp"
#include "periods/integrator.hpp"
#include "periods/mzv.hpp"
#include "periods/numcheck.hpp"
#include "periods/serialize.hpp"

using namespace periods;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kBudget = 3 };

struct Job {
  int n = 0;
  std::string alpha;
  std::string kontsevich;
  std::string input;
  int digits = 0;
  bool reduce = false;
  bool trace = false;
  bool as_json = false;
  std::uint64_t seed = numcheck::Options{}.seed;
  std::string expected;
};

std::vector<int> parse_eps(const std::string& text) {
  std::vector<int> eps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok != "0" && tok != "1") throw Error(ErrorCode::InvalidInput, "epsilon entries must be 0 or 1, got \"" + tok + "\"");
    eps.push_back(tok == "1");
  }
  return eps;
}

/// "i,j:e" entries separated by commas, semicolons or spaces.
std::map<ngon::Chord, int> parse_alpha(const dihedral::DihedralNGon& g, const std::string& text) {
  static const std::regex entry(R"(\s*(\d+)\s*,\s*(\d+)\s*:\s*(-?\d+)\s*[,;]?)");
  std::map<ngon::Chord, int> alpha;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend()) {
    if (std::all_of(it, text.cend(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) break;
    if (!std::regex_search(it, text.cend(), m, entry, std::regex_constants::match_continuous))
      throw Error(ErrorCode::InvalidInput, "cannot parse alpha near \"" + std::string(it, text.cend()) + "\"");
    const ngon::Chord c = ngon::make_chord(g, std::stoi(m[1]), std::stoi(m[2]));
    alpha[c] += std::stoi(m[3]);
    it = m[0].second;
  }
  return alpha;
}

dihedral::DihedralMonomial monomial_of(const Job& job) {
  if (!job.input.empty()) {
    std::string text = job.input;
    if (text[0] == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + text.substr(1));
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return serialize::monomial_from_json(text);
  }
  if (!job.kontsevich.empty()) return dihedral::kontsevich_to_monomial(parse_eps(job.kontsevich)).monomial;
  if (job.n == 0) throw Error(ErrorCode::InvalidInput, "give --n, --kontsevich or --input");
  dihedral::DihedralNGon g(job.n);
  return dihedral::make_monomial(g, parse_alpha(g, job.alpha));
}

std::string numeric_text(const mzv::MzvCombination& c, int digits) { return mzv::eval_numeric(c, digits).decimal; }

int cmd_period(const Job& job) {
  integrator::Options opt{job.trace};
  integrator::PeriodResult res;
  json extra = json::object();
  if (!job.kontsevich.empty() && job.input.empty()) {
    const auto eps = parse_eps(job.kontsevich);
    integrator::PeriodResult k = integrator::integrate_kontsevich(eps, opt);
    const int sign = dihedral::kontsevich_to_monomial(eps).sign;
    res = k;
    res.value = k.value * Rational(sign);
    extra["kontsevich_integral"] = json::parse(serialize::to_json(k.value));
    extra["sign"] = sign;
  } else {
    res = integrator::integrate_cell(monomial_of(job), opt);
  }
  if (job.reduce) res.value = mzv::reduce(res.value, std::max(5, res.value.weight()));
  if (job.as_json) {
    json j = json::parse(serialize::to_json(res));
    j.update(extra);
    if (job.digits > 0) j["numeric"] = numeric_text(res.value, job.digits);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  if (job.trace)
    for (const auto& t : res.trace)
      std::cout << "# " << t.stage << " x" << t.variable << ": " << t.terms << " terms, weight " << t.weight << "\n";
  std::cout << res.value.str() << "\n";
  if (job.digits > 0) std::cout << numeric_text(res.value, job.digits) << "\n";
  return kOk;
}

int cmd_analyze(const Job& job) {
  json rows = json::array();
  std::ostringstream out;
  if (!job.kontsevich.empty() && job.input.empty()) {
    for (const auto& d : dihedral::kontsevich_divisors(parse_eps(job.kontsevich))) {
      rows.push_back({{"partition", d.partition.str()}, {"case", static_cast<int>(d.kind)}, {"ord", d.order}});
      out << d.partition.str() << "  case " << static_cast<int>(d.kind) << "  ord " << d.order
          << (d.order < 0 ? "  pole" : "") << "\n";
    }
  } else {
    const auto m = monomial_of(job);
    for (const auto& p : ngon::enumerate_stable_partitions(m.g)) {
      const int ord = dihedral::ord_form(m, p);
      auto chord = ngon::chord_of_partition(m.g, p);
      json row{{"partition", p.str()}, {"ord", ord}};
      if (chord) row["chord"] = chord->str();
      rows.push_back(row);
      out << p.str() << "  " << (chord ? "chord " + chord->str() : std::string("not a chord")) << "  ord " << ord
          << (ord < 0 ? (chord ? "  pole on the cell boundary" : "  pole") : "") << "\n";
    }
  }
  if (job.as_json)
    std::cout << json{{"divisors", rows}}.dump() << "\n";
  else
    std::cout << out.str();
  return kOk;
}

int cmd_verify(const Job& job) {
  const auto m = monomial_of(job);
  const int digits = job.digits > 0 ? job.digits : 8;
  numcheck::Options opt;
  opt.seed = job.seed;
  opt.target_digits = digits;
  numcheck::VerifyReport rep = numcheck::verify(m, digits, opt);
  bool pass = rep.pass;
  json j = json::parse(serialize::to_json(rep));
  std::string expected_line;
  if (!job.expected.empty()) {
    numcheck::VerifyReport e = numcheck::compare(mzv::parse(job.expected), rep.numeric);
    pass = pass && e.pass;
    j["expected"] = json::parse(serialize::to_json(e));
    expected_line = "expected " + e.symbolic.str() + " = " + e.symbolic_value + ", delta " + e.delta +
                    (e.pass ? " PASS" : " FAIL") + "\n";
  }
  j["pass"] = pass;
  if (job.as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rep.str() << "\n" << expected_line;
    std::cout << (pass ? "verified" : "verification FAILED") << "\n";
  }
  return pass ? kOk : kVerifyFailed;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::PrecisionUnattainable:
      return kBudget;
    default:
      return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periods of M_{0,n} over the associahedron cell as exact MZV combinations"};
  app.require_subcommand(1);
  Job job;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", job.n, "number of marked points (4..8)");
    sub->add_option("--alpha", job.alpha, "exponents as \"i,j:e\" entries, e.g. \"1,4:1 2,5:1\"");
    sub->add_option("--kontsevich", job.kontsevich, "epsilon vector, e.g. 1,0,0");
    sub->add_option("--input", job.input, "monomial as JSON text, or @file");
    sub->add_option("--digits", job.digits, "decimal digits for numeric output");
    sub->add_flag("--json", job.as_json, "machine-readable output");
  };
  auto* period = app.add_subcommand("period", "exact period of a dihedral monomial");
  add_common(period);
  period->add_flag("--reduce", job.reduce, "normal form modulo double shuffle relations");
  period->add_flag("--trace", job.trace, "print term counts after each integration stage");
  auto* analyze = app.add_subcommand("analyze", "orders of the form along every boundary divisor");
  add_common(analyze);
  auto* verify = app.add_subcommand("verify", "compare the exact period against quadrature");
  add_common(verify);
  verify->add_option("--seed", job.seed, "Monte Carlo seed");
  verify->add_option("--expected", job.expected, "also test this combination against the quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }
  try {
    if (job.digits < 0 || job.digits > 100) throw Error(ErrorCode::InvalidInput, "--digits must lie in 0..100");
    if (*period) return cmd_period(job);
    if (*analyze) return cmd_analyze(job);
    return cmd_verify(job);
  } catch (const numcheck::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
