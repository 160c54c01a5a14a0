#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "treemod/graph.hpp"

namespace treemod {

inline constexpr int kDefaultPartitionVertexCap = 12;

/// Feasible partitions of a graph in restricted-growth-string order,
/// including the one-block partition. Blocks that can no longer become
/// connected are pruned as soon as a prefix dooms them.
class FeasiblePartitions {
  public:
    explicit FeasiblePartitions(const Multigraph& g, int vertex_cap = kDefaultPartitionVertexCap);

    std::optional<Partition> next();

  private:
    bool viable(int depth) const;

    const Multigraph* graph_;
    std::vector<int> labels_;
    std::vector<int> next_label_;
    int depth_ = 0;
    bool done_ = false;
};

std::vector<Partition> enumerate_feasible_partitions(const Multigraph& g,
                                                     int vertex_cap = kDefaultPartitionVertexCap);

enum class StrengthMethod { BruteForce, Mod1Lp };

struct StrengthResult {
    Rational value;
    Partition critical;
    StrengthMethod method;
};

StrengthResult strength(const Multigraph& g, StrengthMethod method = StrengthMethod::Mod1Lp);

/// Every critical partition, by exhaustive enumeration.
std::vector<Partition> critical_partitions(const Multigraph& g);

enum class CriticalRoute {
    Auto,       // Enumerate when |V| <= 8, otherwise Refine
    Enumerate,  // union of all critical cut sets
    Refine,     // refine an LP critical partition block by block
};

struct FinestCritical {
    Rational strength;
    Partition partition;
};

/// The finest critical partition P_max, together with the strength.
FinestCritical finest_critical_partition(const Multigraph& g, CriticalRoute route = CriticalRoute::Auto);

enum class DensenessMethod { BruteForce, EtaMin };

struct DensenessResult {
    Rational theta;
    Rational dmax;
    VertexSet witness;
};

DensenessResult max_denseness(const Multigraph& g, DensenessMethod method = DensenessMethod::EtaMin);

/// Visits the vertex set of every connected induced subgraph once.
void for_each_connected_subset(const Multigraph& g, const std::function<void(const VertexSet&)>& visit);

}  // namespace treemod
