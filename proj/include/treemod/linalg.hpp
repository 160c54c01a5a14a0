#pragma once

#include <optional>
#include <vector>

#include "treemod/rational.hpp"

namespace treemod {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank by fraction-free Gaussian elimination.
int exact_rank(RationalMatrix rows);

/// Bareiss fraction-free determinant of a square integer matrix.
BigInt bareiss_determinant(IntMatrix m);

/// Unique solution of the square system A x = b, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

}  // namespace treemod
