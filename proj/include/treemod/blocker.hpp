#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treemod/graph.hpp"
#include "treemod/partition_ops.hpp"
#include "treemod/tree_ops.hpp"

namespace treemod {

/// A feasible partition together with its usage vector (1/(k-1)) 1_{E_P}.
struct BlockerElement {
    Partition partition;
    EdgeSet cut;
    Rational usage_value;  // 1/(k-1)
    bool biconnected_shrunk;

    int k() const { return partition.num_blocks(); }
    ExactDensity usage(int num_edges) const;
};

/// Feasible partitions (k >= 2) whose shrunk graph is vertex-biconnected.
std::vector<BlockerElement> enumerate_blocker(const Multigraph& g,
                                              int vertex_cap = kDefaultPartitionVertexCap);

/// Every feasible partition with k >= 2 as a candidate element, flagged by
/// biconnectivity of its shrunk graph.
std::vector<BlockerElement> feasible_partition_vectors(const Multigraph& g,
                                                       int vertex_cap = kDefaultPartitionVertexCap);

/// Vertex test for Adm(Gamma): the tight constraints have full rank.
/// Throws NotAdmissible when v is not in Adm(Gamma).
bool is_extreme_point(const Multigraph& g, const ExactDensity& v, std::size_t tree_cap = kDefaultTreeCap);

enum class MembershipMode { Auto, Exhaustive, Lp };

struct DominantMembership {
    bool member;
    std::optional<Partition> violator;  // minimizes eta(E_P)/(k_P - 1) when not a member
};

/// eta in Dom(Gamma) iff eta(E_P) >= k_P - 1 for every feasible partition.
DominantMembership dominant_membership(const Multigraph& g, const ExactDensity& eta,
                                       MembershipMode mode = MembershipMode::Auto);

struct BlockerReport {
    bool ok = true;
    std::size_t blocker_size = 0;           // by biconnectivity
    std::size_t extreme_by_rank = 0;        // partition vectors passing the rank test
    std::size_t extreme_by_enumeration = 0; // vertices of Adm(Gamma) by double description
    bool rank_matches = false;
    bool enumeration_matches = false;
    bool vertices_are_partition_vectors = false;
    bool reflexive = false;  // vertices of Adm(blocker) are the tree indicators
    std::vector<std::string> messages;
};

/// Cross-checks the blocker three ways and checks reflexivity. |V| <= 7,
/// |E| <= 12.
BlockerReport verify_blocker_small(const Multigraph& g, std::size_t tree_cap = kDefaultTreeCap);

}  // namespace treemod
