#include "linalg.hpp"

namespace periods::linalg {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<Row> solve(const Matrix& A, const Row& b) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  Matrix aug = A;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  Row x(cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) return std::nullopt;
    x[piv[r]] = aug[r][cols];
  }
  return x;
}

}  // namespace periods::linalg
