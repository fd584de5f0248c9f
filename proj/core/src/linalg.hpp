#pragma once

#include <optional>
#include <vector>

#include "periods/rational.hpp"

namespace periods::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
/// Solves A x = b; nullopt if inconsistent. Free variables are set to 0.
std::optional<Row> solve(const Matrix& A, const Row& b);

}  // namespace periods::linalg
