#pragma once

#include <optional>
#include <vector>

#include "hypersing/rational.hpp"

// Small dense exact linear algebra over the rationals. Sizes here are tiny
// (at most a few dozen rows), so plain Gaussian elimination is enough.

namespace hypersing::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols);

std::size_t rank(Matrix m, std::size_t cols);

/// Solves A x = b. Returns the solution if it exists and is unique.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b, std::size_t cols);

/// A basis of {x : A x = 0}.
std::vector<Vector> nullspace(const Matrix& a, std::size_t cols);

Rational dot(const Vector& a, const Vector& b);

}  // namespace hypersing::linalg
