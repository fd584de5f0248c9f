#include "periods/serialize.hpp"

#include <json.hpp>

#include "periods/error.hpp"

namespace periods::serialize {

using nlohmann::json;

namespace {

json parse_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "expected a JSON object");
  return j;
}

std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::pair<int, int> parse_pair_key(const std::string& key) {
  auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t p1 = 0, p2 = 0;
    int i = std::stoi(key.substr(0, comma), &p1);
    int j = std::stoi(key.substr(comma + 1), &p2);
    if (p1 != comma || p2 != key.size() - comma - 1) throw std::invalid_argument(key);
    return {i, j};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidInput, "key \"" + key + "\" is not of the form \"i,j\"");
  }
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw Error(ErrorCode::InvalidInput, what + " must be an integer");
  return v.get<int>();
}

std::vector<int> as_int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw Error(ErrorCode::InvalidInput, what + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, what + " entry"));
  return out;
}

json mzv_json(const mzv::MzvCombination& c) {
  json terms = json::array();
  for (const auto& [w, q] : c.terms())
    terms.push_back({{"coeff", to_string(q)}, {"word", mzv::word_to_composition(w)}});
  if (c.constant() != 0) terms.push_back({{"coeff", to_string(c.constant())}, {"word", json::array()}});
  return json{{"terms", terms}, {"text", c.str()}};
}

json quad_json(const numcheck::QuadratureReport& q) {
  json j{{"estimate", q.estimate},     {"error_bound", q.error_bound}, {"method", numcheck::method_name(q.method)},
         {"nodes", q.nodes},           {"converged", q.converged}};
  if (q.method == numcheck::Method::MonteCarlo) j["seed"] = q.seed;
  return j;
}

}  // namespace

std::string to_json(const dihedral::DihedralMonomial& m) {
  json alpha = json::object();
  for (const auto& [c, e] : m.alpha)
    if (e != 0) alpha[pair_key(c.i, c.j)] = e;
  return json{{"n", m.g.n()}, {"alpha", alpha}}.dump();
}

dihedral::DihedralMonomial monomial_from_json(const std::string& text) {
  json j = parse_object(text);
  if (!j.contains("n")) throw Error(ErrorCode::InvalidInput, "monomial needs \"n\"");
  const int n = as_int(j["n"], "n");
  if (n < 4) throw Error(ErrorCode::InvalidInput, "n must be at least 4");
  dihedral::DihedralNGon g(n);
  std::map<ngon::Chord, int> alpha;
  if (j.contains("alpha")) {
    if (!j["alpha"].is_object()) throw Error(ErrorCode::InvalidInput, "\"alpha\" must be an object");
    for (const auto& [key, v] : j["alpha"].items()) {
      auto [a, b] = parse_pair_key(key);
      alpha[ngon::make_chord(g, a, b)] += as_int(v, "exponent of " + key);
    }
  }
  return dihedral::make_monomial(g, alpha);
}

std::string to_json(const dihedral::CubicalIntegrand& c) {
  json cj = json::object();
  for (const auto& [ij, e] : c.c)
    if (e != 0) cj[pair_key(ij.first, ij.second)] = e;
  return json{{"a", c.a}, {"b", c.b}, {"c", cj}}.dump();
}

dihedral::CubicalIntegrand cubical_from_json(const std::string& text) {
  json j = parse_object(text);
  if (!j.contains("a") || !j.contains("b")) throw Error(ErrorCode::InvalidInput, "cubical integrand needs \"a\" and \"b\"");
  dihedral::CubicalIntegrand c;
  c.a = as_int_list(j["a"], "a");
  c.b = as_int_list(j["b"], "b");
  if (c.a.size() != c.b.size()) throw Error(ErrorCode::InvalidInput, "\"a\" and \"b\" differ in length");
  const int ell = c.ell();
  for (int a = 1; a <= ell; ++a)
    for (int b = a + 1; b <= ell; ++b) c.c[{a, b}] = 0;
  if (j.contains("c")) {
    if (!j["c"].is_object()) throw Error(ErrorCode::InvalidInput, "\"c\" must be an object");
    for (const auto& [key, v] : j["c"].items()) {
      auto ij = parse_pair_key(key);
      if (ij.first < 1 || ij.first >= ij.second || ij.second > ell)
        throw Error(ErrorCode::InvalidInput, "atom " + key + " needs 1 <= i < j <= " + std::to_string(ell));
      c.c[ij] += as_int(v, "exponent of " + key);
    }
  }
  return c;
}

std::string to_json(const mzv::MzvCombination& c) { return mzv_json(c).dump(); }

mzv::MzvCombination mzv_from_json(const std::string& text) {
  json j = parse_object(text);
  if (!j.contains("terms") || !j["terms"].is_array()) throw Error(ErrorCode::InvalidInput, "expected \"terms\" array");
  mzv::MzvCombination out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word") || !t["coeff"].is_string())
      throw Error(ErrorCode::InvalidInput, "term needs a string \"coeff\" and a \"word\"");
    Rational q = parse_rational(t["coeff"].get<std::string>());
    std::vector<int> comp = as_int_list(t["word"], "word");
    if (comp.empty()) {
      out += mzv::MzvCombination(q);
      continue;
    }
    for (int s : comp)
      if (s < 1) throw Error(ErrorCode::InvalidInput, "composition entries must be positive");
    if (comp.back() < 2) throw Error(ErrorCode::InvalidInput, "word is not admissible: last entry must be >= 2");
    out += mzv::MzvCombination::zeta(comp, q);
  }
  return out;
}

std::string to_json(const polylog::PolylogExpr& e) {
  json terms = json::array();
  for (const auto& [key, c] : e.terms()) {
    json slots = json::array();
    for (const auto& w : key.slots) slots.push_back(w.to_vector());
    terms.push_back({{"coeff", c.str()}, {"zeta", key.zeta.empty() ? mzv::CompositionWord{} : mzv::word_to_composition(key.zeta)}, {"slots", slots}});
  }
  return json{{"ell", e.ell()}, {"terms", terms}}.dump();
}

std::string to_json(const integrator::PeriodResult& r) {
  json trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"stage", t.stage}, {"variable", t.variable}, {"terms", t.terms}, {"weight", t.weight}});
  json j = mzv_json(r.value);
  j["weight_bound"] = r.weight_bound;
  if (!r.trace.empty()) j["trace"] = trace;
  return j.dump();
}

std::string to_json(const numcheck::QuadratureReport& q) { return quad_json(q).dump(); }

std::string to_json(const numcheck::VerifyReport& v) {
  return json{{"symbolic", mzv_json(v.symbolic)},
              {"symbolic_value", v.symbolic_value},
              {"numeric", quad_json(v.numeric)},
              {"delta", v.delta},
              {"pass", v.pass}}
      .dump();
}

}  // namespace periods::serialize
