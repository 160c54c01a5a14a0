#pragma once

#include <random>
#include <vector>

#include "treemod/graph.hpp"

namespace treemod::testing {

/// Connected multigraph: a random spanning tree plus `extra` random edges,
/// parallel edges allowed.
inline Multigraph random_connected(std::mt19937& rng, int n, int extra) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        pairs.emplace_back(parent(rng), v);
    }
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int a = any(rng), b = any(rng);
        while (b == a) b = any(rng);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Multigraph::from_pairs(n, pairs);
}

/// Positive rationals p/q with 1 <= p <= max_num, 1 <= q <= max_den.
inline std::vector<Rational> random_sigma(std::mt19937& rng, int m, int max_num = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    std::vector<Rational> sigma;
    for (int e = 0; e < m; ++e) sigma.emplace_back(num(rng), den(rng));
    return sigma;
}

inline std::vector<Rational> random_integer_sigma(std::mt19937& rng, int m, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Rational> sigma;
    for (int e = 0; e < m; ++e) sigma.emplace_back(d(rng));
    return sigma;
}

}  // namespace treemod::testing
