#pragma once

#include <vector>

#include "treemod/rational.hpp"

namespace treemod {

/// Vertices of the blocking polyhedron { x >= 0 : a_i . x >= 1 for all i }
/// for nonnegative rows a_i, by the double description method on the
/// homogenized cone. Exact; meant for small dimensions. Vertices are
/// returned sorted.
std::vector<std::vector<Rational>> blocking_polyhedron_vertices(const std::vector<std::vector<Rational>>& rows,
                                                                int dim);

}  // namespace treemod
