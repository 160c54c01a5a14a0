#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "treemod/graph.hpp"
#include "treemod/modulus.hpp"
#include "treemod/tree_ops.hpp"

namespace treemod {

/// eta(E_P) == k_P - 1. Throws InfeasiblePartition, TrivialSinglePartition.
bool is_beurling(const Multigraph& g, const Partition& p, const ExactDensity& eta_star);

/// Every fair tree meets E_P in exactly k_P - 1 edges. Oracle scale.
bool beurling_fairtree_oracle(const Multigraph& g, const Partition& p, std::size_t tree_cap = kDefaultTreeCap);

/// Every fair tree restricts to a spanning tree of every block. Oracle scale.
bool restriction_property_oracle(const Multigraph& g, const Partition& p,
                                 std::size_t tree_cap = kDefaultTreeCap);

/// Same two oracles against a fair-tree set computed once by fair_trees_small.
bool beurling_fairtree_oracle(const Multigraph& g, const Partition& p, const std::vector<SpanningTree>& fair);
bool restriction_property_oracle(const Multigraph& g, const Partition& p,
                                 const std::vector<SpanningTree>& fair);

struct ExtremalEdgeSets {
    EdgeSet e_min;
    EdgeSet e_max;
    Rational eta_min;  // min of sigma^{-1} eta*
    Rational eta_max;
};

struct ExtremalPartitions {
    Partition p_min;
    Partition p_max;
    ExtremalEdgeSets sets;
    ExactDensity eta_star;
};

ExtremalPartitions extremal_partitions(const Multigraph& g, const SolverSettings& settings = {});

enum class DeflationStrategy { PMin, PMax };

const char* to_string(DeflationStrategy s);

struct DecompositionNode {
    enum class Kind { BlockSubgraph, ShrunkGraph };

    Kind kind = Kind::BlockSubgraph;
    Multigraph piece;
    /// Constant sigma^{-1} eta* on the piece; empty for pieces that are not homogeneous.
    std::optional<Rational> level;
    Rational meo_contribution = 0;
    /// Terminal nodes are homogeneous; their edge sets partition E.
    bool terminal = false;
    std::vector<DecompositionNode> children;
};

const char* to_string(DecompositionNode::Kind kind);

/// pmax: the shrunk graph G_{P_max} comes first, then one child per block.
/// pmin: components of H_min first, then the recursion on the shrunk graph.
DecompositionNode deflate(const Multigraph& g, DeflationStrategy strategy, const SolverSettings& settings = {});

/// Same, reusing an exact eta* of g indexed by local edge position.
DecompositionNode deflate(const Multigraph& g, DeflationStrategy strategy, const ExactDensity& eta_star);

/// Terminal nodes in preorder.
std::vector<const DecompositionNode*> terminal_pieces(const DecompositionNode& root);

Rational total_meo(const DecompositionNode& root);

/// (theta, sorted edge ids) of every terminal piece with at least one edge, sorted.
std::vector<std::pair<Rational, std::vector<int>>> leaf_signature(const DecompositionNode& root);

struct GammaP {
    Partition partition;
    std::vector<SpanningTree> trees;
    bool shrunk_restriction_ok = false;   // restrictions to E_P are the trees of G_P
    bool block_restrictions_ok = false;   // restrictions to E_i are the trees of G_i
    bool count_ok = false;                // |Gamma^P| is the product of the piece counts
    BigInt product_count;
};

GammaP gamma_P_oracle(const Multigraph& g, const Partition& p, std::size_t tree_cap = kDefaultTreeCap);

/// Pieces of a partition, in the order used by serial_pmf: the induced block
/// subgraphs, then the shrunk graph.
std::vector<Multigraph> serial_pieces(const Multigraph& g, const Partition& p);

template <class T>
struct SerialMarginals {
    std::vector<BasicTreePmf<T>> blocks;
    BasicTreePmf<T> shrunk;
};

/// Product measure of piece pmfs. Each pmf is over trees of the matching
/// piece from serial_pieces. Throws PartitionNotBeurling.
template <class T>
BasicTreePmf<T> serial_pmf(const Multigraph& g, const Partition& p, const ExactDensity& eta_star,
                           const std::vector<BasicTreePmf<T>>& block_pmfs, const BasicTreePmf<T>& shrunk_pmf,
                           std::size_t support_cap = kDefaultTreeCap);

/// Marginals of a pmf on Gamma^P. Throws SupportNotInGammaP.
template <class T>
SerialMarginals<T> marginal_pmfs(const Multigraph& g, const Partition& p, const BasicTreePmf<T>& pmf);

}  // namespace treemod
