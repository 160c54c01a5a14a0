#include "treemod/tree_ops.hpp"

#include <deque>
#include <functional>

#include "treemod/linalg.hpp"

namespace treemod {

namespace {

// Union-find with undo, for backtracking searches.
class RollbackUnionFind {
  public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        --components_;
        return true;
    }
    void undo() {
        int b = history_.back();
        history_.pop_back();
        int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
        ++components_;
    }
    int components() const { return components_; }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    int components_;
};

}  // namespace

bool is_spanning_tree(const Multigraph& g, const EdgeSet& edges) {
    if (static_cast<int>(edges.size()) != g.num_vertices() - 1) return false;
    UnionFind uf(g.num_vertices());
    for (int e : edges) {
        if (e < 0 || e >= g.num_edges()) return false;
        if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
    }
    return uf.components() == 1;
}

std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g, std::size_t cap) {
    require_connected(g);
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<SpanningTree> trees;
    RollbackUnionFind uf(n);
    EdgeSet chosen;

    // Could the chosen edges plus edges [from, m) still span the graph?
    auto completable = [&](int from) {
        UnionFind probe(n);
        for (int e : chosen) probe.unite(g.edge(e).u, g.edge(e).v);
        for (int e = from; e < m; ++e) probe.unite(g.edge(e).u, g.edge(e).v);
        return probe.components() == 1;
    };

    std::function<void(int)> recurse = [&](int i) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            if (trees.size() >= cap) {
                throw Error(ErrorKind::TooManyTrees, "more than " + std::to_string(cap) + " trees");
            }
            trees.push_back({chosen});
            return;
        }
        if (i == m) return;
        // Contract edge i.
        if (uf.unite(g.edge(i).u, g.edge(i).v)) {
            chosen.push_back(i);
            recurse(i + 1);
            chosen.pop_back();
            uf.undo();
        }
        // Delete edge i.
        if (completable(i + 1)) recurse(i + 1);
    };
    recurse(0);
    return trees;
}

BigInt count_spanning_trees(const Multigraph& g) {
    require_connected(g);
    const int n = g.num_vertices();
    IntMatrix lap(n - 1, std::vector<BigInt>(n - 1, 0));
    for (const auto& e : g.edges()) {
        if (e.u < n - 1) lap[e.u][e.u] += 1;
        if (e.v < n - 1) lap[e.v][e.v] += 1;
        if (e.u < n - 1 && e.v < n - 1) {
            lap[e.u][e.v] -= 1;
            lap[e.v][e.u] -= 1;
        }
    }
    return bareiss_determinant(std::move(lap));
}

EdgeSet restrict_edges(const EdgeSet& gamma, const EdgeSet& a) {
    EdgeSet sa = a;
    std::sort(sa.begin(), sa.end());
    EdgeSet out;
    for (int e : gamma) {
        if (std::binary_search(sa.begin(), sa.end(), e)) out.push_back(e);
    }
    return out;
}

// ---- packing -------------------------------------------------------------------

PackingCertificate max_disjoint_tree_packing(const Multigraph& g,
                                             const std::optional<std::vector<int>>& capacity) {
    require_connected(g);
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<int> cap = capacity ? *capacity : std::vector<int>(m, 1);
    if (static_cast<int>(cap.size()) != m) {
        throw Error(ErrorKind::InvalidArgument, "capacity vector has wrong length");
    }
    int total = 0;
    for (int c : cap) {
        if (c <= 0) throw Error(ErrorKind::NonPositiveWeight, "packing capacities must be positive");
        total += c;
    }
    if (n > 10 || total > 24) {
        throw Error(ErrorKind::TooLargeForBruteForce,
                    "|V| = " + std::to_string(n) + ", expanded |E| = " + std::to_string(total));
    }

    // Multisets of trees are searched in nondecreasing index order, which
    // removes the symmetry between parallel copies of an edge.
    const auto trees = enumerate_spanning_trees(g);
    const int t = static_cast<int>(trees.size());

    std::vector<int> remaining = cap;
    std::vector<int> used(t, 0);

    auto prune = [&](int need) {
        int sum = 0;
        std::vector<int> degree(n, 0);
        UnionFind uf(n);
        for (int e = 0; e < m; ++e) {
            if (remaining[e] == 0) continue;
            sum += remaining[e];
            degree[g.edge(e).u] += remaining[e];
            degree[g.edge(e).v] += remaining[e];
            uf.unite(g.edge(e).u, g.edge(e).v);
        }
        if (sum < need * (n - 1) || uf.components() != 1) return true;
        for (int d : degree) {
            if (d < need) return true;
        }
        return false;
    };

    std::function<bool(int, int)> search = [&](int first, int need) {
        if (need == 0) return true;
        if (prune(need)) return false;
        for (int j = first; j < t; ++j) {
            bool fits = true;
            for (int e : trees[j].edges) {
                if (remaining[e] == 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for (int e : trees[j].edges) --remaining[e];
            ++used[j];
            if (search(j, need - 1)) return true;
            --used[j];
            for (int e : trees[j].edges) ++remaining[e];
        }
        return false;
    };

    for (int k = total / (n - 1); k >= 1; --k) {
        remaining = cap;
        std::fill(used.begin(), used.end(), 0);
        if (!search(0, k)) continue;
        PackingCertificate cert;
        cert.count = k;
        for (int j = 0; j < t; ++j) {
            if (used[j] > 0) {
                cert.trees.push_back(trees[j]);
                cert.multiplicity.push_back(used[j]);
            }
        }
        return cert;
    }
    throw Error(ErrorKind::InternalConsistency, "a connected graph packs at least one tree");
}

// ---- witness trees ---------------------------------------------------------------

namespace {

// Two internally vertex-disjoint paths between `source` and `sink` in an
// undirected multigraph given as an edge list, via unit vertex capacities.
// Returns, per path, the list of edge indices from source to sink.
std::optional<std::vector<std::vector<int>>> two_disjoint_paths(
    int n, const std::vector<std::pair<int, int>>& edges, int source, int sink) {
    // Node v splits into in = 2v and out = 2v+1.
    struct Arc {
        int to;
        int cap;
        int rev;
        int edge;  // undirected edge index, -1 for split arcs
    };
    std::vector<std::vector<Arc>> adj(2 * n);
    auto add_arc = [&](int a, int b, int c, int edge) {
        adj[a].push_back({b, c, static_cast<int>(adj[b].size()), edge});
        adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1, -1});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == source || v == sink) ? 2 : 1, -1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [a, b] = edges[k];
        add_arc(2 * a + 1, 2 * b, 1, static_cast<int>(k));
        add_arc(2 * b + 1, 2 * a, 1, static_cast<int>(k));
    }
    const int s = 2 * source, t = 2 * sink + 1;
    for (int round = 0; round < 2; ++round) {
        std::vector<std::pair<int, int>> prev(2 * n, {-1, -1});
        std::deque<int> queue{s};
        prev[s] = {s, -1};
        while (!queue.empty() && prev[t].first < 0) {
            int a = queue.front();
            queue.pop_front();
            for (int i = 0; i < static_cast<int>(adj[a].size()); ++i) {
                const Arc& arc = adj[a][i];
                if (arc.cap > 0 && prev[arc.to].first < 0) {
                    prev[arc.to] = {a, i};
                    queue.push_back(arc.to);
                }
            }
        }
        if (prev[t].first < 0) return std::nullopt;
        for (int v = t; v != s;) {
            auto [a, i] = prev[v];
            Arc& arc = adj[a][i];
            arc.cap -= 1;
            adj[arc.to][arc.rev].cap += 1;
            v = a;
        }
    }
    // Net flow per undirected edge and direction; opposite flows cancel.
    std::vector<std::vector<std::pair<int, int>>> out(n);  // v -> (w, edge)
    std::vector<int> flow_dir(edges.size(), 0);            // +1 a->b, -1 b->a
    for (int a = 0; a < 2 * n; ++a) {
        for (const Arc& arc : adj[a]) {
            if (arc.edge < 0 || arc.cap != 0) continue;
            int from = a / 2;
            flow_dir[arc.edge] += (edges[arc.edge].first == from) ? 1 : -1;
        }
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (flow_dir[k] > 0) out[edges[k].first].push_back({edges[k].second, static_cast<int>(k)});
        if (flow_dir[k] < 0) out[edges[k].second].push_back({edges[k].first, static_cast<int>(k)});
    }
    std::vector<std::vector<int>> paths;
    for (const auto& [first, first_edge] : out[source]) {
        std::vector<int> path{first_edge};
        int v = first;
        while (v != sink) {
            auto [w, e] = out[v].front();
            path.push_back(e);
            v = w;
        }
        paths.push_back(path);
    }
    if (paths.size() != 2) return std::nullopt;
    return paths;
}

}  // namespace

std::pair<SpanningTree, SpanningTree> witness_trees(const Multigraph& g, int e1, int e2) {
    const int m = g.num_edges();
    if (e1 < 0 || e2 < 0 || e1 >= m || e2 >= m) {
        throw Error(ErrorKind::UnknownEdgeId, "witness edge out of range");
    }
    if (e1 == e2) throw Error(ErrorKind::SameEdge, std::to_string(e1));
    if (!is_vertex_biconnected(g)) throw Error(ErrorKind::NotBiconnected, "witness_trees");
    const int n = g.num_vertices();

    EdgeSet cycle;
    if (n == 2) {
        cycle = {e1, e2};
    } else {
        // Subdivide e1 by x = n and e2 by y = n + 1.
        std::vector<std::pair<int, int>> edges;
        std::vector<int> origin;
        for (int e = 0; e < m; ++e) {
            if (e == e1 || e == e2) continue;
            edges.emplace_back(g.edge(e).u, g.edge(e).v);
            origin.push_back(e);
        }
        const int x = n, y = n + 1;
        for (auto [mid, e] : {std::pair{x, e1}, std::pair{y, e2}}) {
            edges.emplace_back(mid, g.edge(e).u);
            origin.push_back(e);
            edges.emplace_back(mid, g.edge(e).v);
            origin.push_back(e);
        }
        auto paths = two_disjoint_paths(n + 2, edges, x, y);
        if (!paths) throw Error(ErrorKind::InternalConsistency, "no cycle through both edges");
        for (const auto& path : *paths) {
            for (int k : path) cycle.push_back(origin[k]);
        }
        std::sort(cycle.begin(), cycle.end());
        cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
    }

    // gamma1: extend the path C \ {e2} greedily by edge position.
    UnionFind uf(n);
    EdgeSet gamma1;
    for (int e : cycle) {
        if (e == e2) continue;
        if (!uf.unite(g.edge(e).u, g.edge(e).v)) {
            throw Error(ErrorKind::InternalConsistency, "cycle minus an edge is not a path");
        }
        gamma1.push_back(e);
    }
    for (int e = 0; e < m; ++e) {
        if (e == e2) continue;
        if (uf.unite(g.edge(e).u, g.edge(e).v)) gamma1.push_back(e);
    }
    std::sort(gamma1.begin(), gamma1.end());
    gamma1.erase(std::unique(gamma1.begin(), gamma1.end()), gamma1.end());
    EdgeSet gamma2;
    for (int e : gamma1) {
        if (e != e1) gamma2.push_back(e);
    }
    gamma2.push_back(e2);
    std::sort(gamma2.begin(), gamma2.end());
    return {SpanningTree{gamma1}, SpanningTree{gamma2}};
}

}  // namespace treemod
