#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "treemod/graph.hpp"

namespace treemod {

struct SpanningTree {
    EdgeSet edges;  // sorted local edge positions, |V|-1 of them

    auto operator<=>(const SpanningTree&) const = default;
};

template <class T>
struct WeightedTree {
    SpanningTree tree;
    T length;
};

/// Kruskal under the given density. Ties are broken by the lower edge
/// position, so the result is deterministic. Throws Disconnected.
template <class T>
WeightedTree<T> minimum_spanning_tree(const Multigraph& g, const std::vector<T>& rho) {
    std::vector<int> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rho[a] < rho[b]; });
    UnionFind uf(g.num_vertices());
    WeightedTree<T> out{{}, T(0)};
    for (int e : order) {
        if (uf.unite(g.edge(e).u, g.edge(e).v)) {
            out.tree.edges.push_back(e);
            out.length += rho[e];
        }
    }
    if (uf.components() != 1) throw Error(ErrorKind::Disconnected, "no spanning tree exists");
    std::sort(out.tree.edges.begin(), out.tree.edges.end());
    return out;
}

template <class T>
T tree_length(const SpanningTree& tree, const std::vector<T>& rho) {
    T sum(0);
    for (int e : tree.edges) {
        if (e < 0 || static_cast<std::size_t>(e) >= rho.size()) {
            throw Error(ErrorKind::UnknownEdgeId, std::to_string(e));
        }
        sum += rho[e];
    }
    return sum;
}

bool is_spanning_tree(const Multigraph& g, const EdgeSet& edges);

inline constexpr std::size_t kDefaultTreeCap = 1000000;

/// All spanning trees in lexicographic order of their sorted edge tuples.
/// Throws TooManyTrees once more than `cap` trees are found.
std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g,
                                                   std::size_t cap = kDefaultTreeCap);

/// Matrix-tree theorem on the reduced Laplacian (edge multiplicities count).
BigInt count_spanning_trees(const Multigraph& g);

EdgeSet restrict_edges(const EdgeSet& gamma, const EdgeSet& a);

struct PackingCertificate {
    /// Distinct trees; with unit capacities they are pairwise edge-disjoint.
    std::vector<SpanningTree> trees;
    /// How many copies of each tree are packed.
    std::vector<int> multiplicity;
    int count = 0;
};

/// Maximum number of spanning trees packed under integer edge capacities
/// (all 1 when `capacity` is empty). Exhaustive search, desk scale only:
/// |V| <= 10 and total capacity <= 24.
PackingCertificate max_disjoint_tree_packing(const Multigraph& g,
                                             const std::optional<std::vector<int>>& capacity = {});

/// Two spanning trees with gamma1 \ gamma2 = {e1} and gamma2 \ gamma1 = {e2}
/// in a vertex-biconnected graph.
std::pair<SpanningTree, SpanningTree> witness_trees(const Multigraph& g, int e1, int e2);

}  // namespace treemod
