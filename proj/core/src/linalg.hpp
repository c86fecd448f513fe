#pragma once

// Small dense exact-rational linear algebra used by the kernel, regularity
// and contraction modules. Everything is fraction-based Gaussian elimination;
// the matrices here never exceed a few dozen rows.

#include <optional>
#include <vector>

#include "cubeflip/rational.hpp"

namespace cubeflip::linalg {

using Matrix = std::vector<std::vector<Rational>>;  // row major

int rank(Matrix m);

/// Determinant of a square matrix.
Rational det(Matrix m);

/// If the kernel of m (columns n) is one-dimensional, returns a generator.
std::optional<std::vector<Rational>> kernel_if_1d(Matrix m, int cols);

/// Solves m·x = rhs for square m; nullopt if singular.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs);

}  // namespace cubeflip::linalg
