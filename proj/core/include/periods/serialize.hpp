#pragma once

#include <string>

#include "periods/dihedral.hpp"
#include "periods/integrator.hpp"
#include "periods/mzv.hpp"
#include "periods/numcheck.hpp"
#include "periods/polylog.hpp"

/// JSON text forms. Parsers throw Error(InvalidInput) on malformed or out-of-range input.
namespace periods::serialize {

/// {"n": 5, "alpha": {"2,4": 1}}
std::string to_json(const dihedral::DihedralMonomial& m);
dihedral::DihedralMonomial monomial_from_json(const std::string& text);

/// {"a": [...], "b": [...], "c": {"1,2": -1}}
std::string to_json(const dihedral::CubicalIntegrand& c);
dihedral::CubicalIntegrand cubical_from_json(const std::string& text);

/// {"terms": [{"coeff": "3/2", "word": [2]}, ...]}; the constant has an empty word.
std::string to_json(const mzv::MzvCombination& c);
mzv::MzvCombination mzv_from_json(const std::string& text);

/// {"ell": 2, "terms": [{"coeff": "...", "zeta": [2], "slots": [[0, 1], []]}]}
std::string to_json(const polylog::PolylogExpr& e);

std::string to_json(const integrator::PeriodResult& r);
std::string to_json(const numcheck::QuadratureReport& q);
std::string to_json(const numcheck::VerifyReport& v);

}  // namespace periods::serialize
