#pragma once

#include <cstddef>
#include <optional>

#include "godbersen/rational.hpp"

// Small dense exact linear algebra over Rat. Matrices are row-major
// vectors of rows; sizes here never exceed a handful of rows.
namespace godbersen::linalg {

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& m);
Vector apply(const Matrix& m, const Vector& v);
Matrix multiply(const Matrix& a, const Matrix& b);

Rat determinant(Matrix m);
std::size_t rank(Matrix m);

/// Rank of the affine hull of the points (so n+1 independent points give n).
std::size_t affine_rank(const std::vector<Point>& points);

/// Throws SingularMatrix when det(m) == 0.
Matrix inverse(const Matrix& m);

/// Unique solution of m x = rhs, or nullopt when m is singular.
std::optional<Vector> solve(Matrix m, Vector rhs);

/// Basis of the null space {x : m x = 0}, m having `cols` columns.
std::vector<Vector> null_space(Matrix m, std::size_t cols);

/// Normal of the hyperplane through n affinely independent points in R^n.
/// Orientation is arbitrary; returns nullopt for a degenerate point set.
std::optional<Vector> hyperplane_normal(const std::vector<Point>& points);

}  // namespace godbersen::linalg
