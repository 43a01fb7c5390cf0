#include "godbersen/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "godbersen/errors.hpp"

namespace godbersen::linalg {

Matrix identity(std::size_t n) {
  Matrix m(n, Vector(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Vector apply(const Matrix& m, const Vector& v) {
  Vector r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const Matrix bt = transpose(b);
  Matrix r(a.size(), Vector(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  }
  return r;
}

namespace {

// In-place reduction to row echelon form. Returns pivot columns and the
// sign of the row permutation.
std::vector<std::size_t> echelon(Matrix& m, std::size_t cols, int* perm_sign) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    if (p != row) {
      std::swap(m[p], m[row]);
      sign = -sign;
    }
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  if (perm_sign) *perm_sign = sign;
  return pivots;
}

}  // namespace

Rat determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: non-square matrix");
  }
  int sign = 1;
  const auto pivots = echelon(m, n, &sign);
  if (pivots.size() < n) return Rat(0);
  Rat det(sign);
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  return echelon(m, cols, nullptr).size();
}

std::size_t affine_rank(const std::vector<Point>& points) {
  if (points.size() <= 1) return 0;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(std::move(diffs));
}

std::optional<Vector> solve(Matrix m, Vector rhs) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  int sign = 1;
  const auto pivots = echelon(m, n, &sign);
  if (pivots.size() < n) return std::nullopt;
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc = m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * x[j];
    x[ii] = acc / m[ii][ii];
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix cols;
  cols.reserve(n);
  const Matrix id = identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve(m, id[j]);
    if (!x) throw SingularMatrix("matrix is singular");
    cols.push_back(std::move(*x));
  }
  return transpose(cols);
}

std::vector<Vector> null_space(Matrix m, std::size_t cols) {
  const auto pivots = echelon(m, cols, nullptr);
  // Back-reduce to reduced row echelon form.
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    const Rat lead = m[r][pc];
    for (std::size_t c = pc; c < cols; ++c) m[r][c] /= lead;
    for (std::size_t up = 0; up < r; ++up) {
      if (m[up][pc].is_zero()) continue;
      const Rat f = m[up][pc];
      for (std::size_t c = pc; c < cols; ++c) m[up][c] -= f * m[r][c];
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> hyperplane_normal(const std::vector<Point>& points) {
  if (points.empty()) return std::nullopt;
  const std::size_t n = points[0].size();
  if (points.size() != n) return std::nullopt;
  Matrix diffs;
  diffs.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) diffs.push_back(points[i] - points[0]);
  auto basis = null_space(std::move(diffs), n);
  if (basis.size() != 1) return std::nullopt;
  return std::move(basis.front());
}

}  // namespace godbersen::linalg
