#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treemod/error.hpp"
#include "treemod/rational.hpp"

namespace treemod {

/// Sorted list of local vertex indices.
using VertexSet = std::vector<int>;
/// Sorted list of local edge indices.
using EdgeSet = std::vector<int>;

/// Edge density indexed by local edge position. Rational in the exact
/// engine, double in the numeric one.
using ExactDensity = std::vector<Rational>;
using Density = std::vector<double>;

struct Edge {
    int id;  // stable label, preserved by induced_subgraph and shrink
    int u;
    int v;
};

/// Undirected weighted multigraph. Parallel edges are allowed, self-loops
/// are not. Edges carry a stable id; everything else addresses edges by
/// their local position 0..num_edges()-1. For a freshly parsed graph the two
/// coincide.
class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
               std::vector<Rational> sigma);

    /// Unit-weight graph on vertices 0..n-1 named by their index.
    static Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Rational>& sigma() const { return sigma_; }
    const Rational& sigma(int e) const { return sigma_[e]; }
    Density sigma_double() const;
    Rational total_sigma() const;
    bool unit_weights() const;

    const std::string& vertex_name(int v) const { return names_[v]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    /// -1 when absent.
    int find_vertex(std::string_view name) const;

    /// Local incident edge positions of v.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    /// Local position of the edge labelled `id`; throws UnknownEdgeId.
    int local_edge(int id) const;
    std::vector<int> edge_ids(const EdgeSet& local) const;

    Multigraph with_sigma(std::vector<Rational> sigma) const;

  private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<Rational> sigma_;
    std::vector<std::vector<int>> incident_;
};

class UnionFind {
  public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);
    int components() const { return components_; }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

/// Partition of the vertex set. Blocks are sorted internally and ordered by
/// their minimal member, so equal partitions compare equal.
class Partition {
  public:
    Partition() = default;
    /// Throws BlocksDoNotCoverV unless blocks are nonempty, disjoint and cover 0..n-1.
    static Partition from_blocks(int n, std::vector<VertexSet> blocks);
    /// Any labelling; vertices with equal labels share a block.
    static Partition from_labels(const std::vector<int>& labels);
    static Partition singletons(int n);
    static Partition whole(int n);

    int num_vertices() const { return static_cast<int>(block_of_.size()); }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    const VertexSet& block(int i) const { return blocks_[i]; }
    int block_of(int v) const { return block_of_[v]; }

    bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }
    bool operator<(const Partition& other) const { return blocks_ < other.blocks_; }

  private:
    std::vector<VertexSet> blocks_;
    std::vector<int> block_of_;
};

std::string format_partition(const Multigraph& g, const Partition& p);

// ---- parsing -----------------------------------------------------------

/// Edge-list document: '#' starts a comment, each non-empty line is
/// `<u> <v> [w]`, w a rational "p/q" or decimal. Missing weights are 1.
Multigraph parse_graph(std::string_view text);
/// Inverse of parse_graph, with weights always written as "p/q".
std::string serialize_graph(const Multigraph& g);

// ---- structure -----------------------------------------------------------

bool is_connected(const Multigraph& g);
void require_connected(const Multigraph& g);
/// Component label per vertex using only the edges with `use[e]` set.
std::vector<int> component_labels(const Multigraph& g, const std::vector<bool>& use);
Partition components_without(const Multigraph& g, const EdgeSet& removed);

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& vertices);
/// Subgraph formed by an edge set and the vertices it touches.
Multigraph edge_induced_subgraph(const Multigraph& g, const EdgeSet& edges);
/// Quotient graph G_P. Vertices are P's blocks in order; edges are exactly
/// the cut edges, with ids and weights preserved.
Multigraph shrink(const Multigraph& g, const Partition& p);

struct CutInfo {
    EdgeSet cut;
    bool feasible;
};

CutInfo cut_set_and_feasibility(const Multigraph& g, const Partition& p);
EdgeSet cut_set(const Multigraph& g, const Partition& p);
bool is_feasible(const Multigraph& g, const Partition& p);

/// sigma(E_P) / (k_P - 1). Requires a feasible partition with k_P >= 2.
Rational partition_weight(const Multigraph& g, const Partition& p);
/// sigma(E)/(|V|-1).
Rational denseness(const Multigraph& g);

bool is_vertex_biconnected(const Multigraph& g);

/// True iff every block of q is a union of blocks of p.
bool is_finer(const Partition& p, const Partition& q);

}  // namespace treemod
