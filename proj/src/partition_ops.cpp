#include "treemod/partition_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "treemod/modulus.hpp"

namespace treemod {

// ---- feasible partition enumeration ------------------------------------------------

FeasiblePartitions::FeasiblePartitions(const Multigraph& g, int vertex_cap) : graph_(&g) {
    if (g.num_vertices() > vertex_cap) {
        throw Error(ErrorKind::TooManyVertices, std::to_string(g.num_vertices()) + " > " +
                                                    std::to_string(vertex_cap));
    }
    labels_.assign(g.num_vertices(), 0);
    next_label_.assign(g.num_vertices(), 0);
    done_ = g.num_vertices() == 0;
}

// Every block formed by labels_[0..depth] must still be connectable through
// the vertices that are not yet assigned.
bool FeasiblePartitions::viable(int depth) const {
    const Multigraph& g = *graph_;
    const int n = g.num_vertices();
    int blocks = 0;
    for (int v = 0; v <= depth; ++v) blocks = std::max(blocks, labels_[v] + 1);
    // Unassigned vertices get label -1 and act as free connectors per block.
    for (int b = 0; b < blocks; ++b) {
        UnionFind uf(n);
        auto usable = [&](int v) { return v > depth || labels_[v] == b; };
        for (const auto& e : g.edges()) {
            if (usable(e.u) && usable(e.v)) uf.unite(e.u, e.v);
        }
        int root = -1;
        for (int v = 0; v <= depth; ++v) {
            if (labels_[v] != b) continue;
            if (root < 0) {
                root = uf.find(v);
            } else if (uf.find(v) != root) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Partition> FeasiblePartitions::next() {
    const int n = graph_->num_vertices();
    while (!done_) {
        const int i = depth_;
        int max_prev = -1;
        for (int v = 0; v < i; ++v) max_prev = std::max(max_prev, labels_[v]);
        if (next_label_[i] > max_prev + 1) {
            // Exhausted this position; backtrack.
            next_label_[i] = 0;
            if (i == 0) {
                done_ = true;
                break;
            }
            --depth_;
            continue;
        }
        labels_[i] = next_label_[i]++;
        if (!viable(i)) continue;
        if (i == n - 1) return Partition::from_labels(labels_);
        ++depth_;
    }
    return std::nullopt;
}

std::vector<Partition> enumerate_feasible_partitions(const Multigraph& g, int vertex_cap) {
    FeasiblePartitions it(g, vertex_cap);
    std::vector<Partition> out;
    while (auto p = it.next()) out.push_back(std::move(*p));
    return out;
}

// ---- strength ---------------------------------------------------------------------------

namespace {

Rational cut_weight(const Multigraph& g, const EdgeSet& cut) {
    Rational sum = 0;
    for (int e : cut) sum += g.sigma(e);
    return sum;
}

StrengthResult strength_brute_force(const Multigraph& g) {
    FeasiblePartitions it(g);
    std::optional<StrengthResult> best;
    while (auto p = it.next()) {
        if (p->num_blocks() < 2) continue;
        Rational w = cut_weight(g, cut_set(g, *p)) / (p->num_blocks() - 1);
        bool better = !best || w < best->value;
        if (!better && w == best->value) {
            if (p->num_blocks() != best->critical.num_blocks()) {
                better = p->num_blocks() > best->critical.num_blocks();
            } else {
                better = *p < best->critical;
            }
        }
        if (better) best = StrengthResult{w, *p, StrengthMethod::BruteForce};
    }
    return *best;
}

StrengthResult strength_lp(const Multigraph& g) {
    auto lp = mod1_exact(g, g.sigma());
    EdgeSet support;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (lp.rho[e] != 0) support.push_back(e);
    }
    Partition p = components_without(g, support);
    auto info = cut_set_and_feasibility(g, p);
    if (info.cut != support || p.num_blocks() < 2 || partition_weight(g, p) != lp.value) {
        throw Error(ErrorKind::CriticalityCheckFailed,
                    "LP optimum is not the usage vector of a critical partition");
    }
    return {lp.value, std::move(p), StrengthMethod::Mod1Lp};
}

}  // namespace

namespace {
FinestCritical finest_by_refinement(const Multigraph& g);
}  // namespace

StrengthResult strength(const Multigraph& g, StrengthMethod method) {
    require_connected(g);
    if (method == StrengthMethod::BruteForce) return strength_brute_force(g);
    auto finest = finest_by_refinement(g);
    return {finest.strength, std::move(finest.partition), StrengthMethod::Mod1Lp};
}

std::vector<Partition> critical_partitions(const Multigraph& g) {
    require_connected(g);
    const Rational s = strength_brute_force(g).value;
    std::vector<Partition> out;
    FeasiblePartitions it(g);
    while (auto p = it.next()) {
        if (p->num_blocks() >= 2 && partition_weight(g, *p) == s) out.push_back(std::move(*p));
    }
    return out;
}

namespace {

FinestCritical finest_by_enumeration(const Multigraph& g) {
    auto critical = critical_partitions(g);
    const Rational s = partition_weight(g, critical.front());
    std::vector<bool> in_union(g.num_edges(), false);
    for (const auto& p : critical) {
        for (int e : cut_set(g, p)) in_union[e] = true;
    }
    EdgeSet e_max;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (in_union[e]) e_max.push_back(e);
    }
    Partition finest = components_without(g, e_max);
    if (cut_set(g, finest) != e_max || finest.num_blocks() < 2 || partition_weight(g, finest) != s) {
        throw Error(ErrorKind::CriticalityCheckFailed, "union of critical cut sets is not critical");
    }
    for (const auto& p : critical) {
        if (!is_finer(finest, p)) {
            throw Error(ErrorKind::CriticalityCheckFailed, "finest candidate is not finer than " +
                                                               format_partition(g, p));
        }
    }
    return {s, finest};
}

// A critical partition can be refined inside a block B exactly when the
// induced subgraph on B has the same strength, in which case B splits along
// its own finest critical partition.
FinestCritical finest_by_refinement(const Multigraph& g) {
    const StrengthResult top = strength_lp(g);
    const Rational& s = top.value;
    std::vector<int> labels(g.num_vertices());
    int next_label = 0;
    for (const auto& block : top.critical.blocks()) {
        bool split = false;
        if (block.size() >= 2) {
            Multigraph h = induced_subgraph(g, block);
            const Rational sh = strength_lp(h).value;
            if (sh < s) {
                throw Error(ErrorKind::CriticalityCheckFailed,
                            "block strength below the graph strength");
            }
            if (sh == s) {
                auto sub = finest_by_refinement(h);
                for (const auto& sub_block : sub.partition.blocks()) {
                    for (int local : sub_block) labels[block[local]] = next_label;
                    ++next_label;
                }
                split = true;
            }
        }
        if (!split) {
            for (int v : block) labels[v] = next_label;
            ++next_label;
        }
    }
    Partition finest = Partition::from_labels(labels);
    if (!is_feasible(g, finest) || partition_weight(g, finest) != s ||
        !is_finer(finest, top.critical)) {
        throw Error(ErrorKind::CriticalityCheckFailed, "refined partition is not critical");
    }
    return {s, finest};
}

}  // namespace

FinestCritical finest_critical_partition(const Multigraph& g, CriticalRoute route) {
    require_connected(g);
    if (route == CriticalRoute::Auto) {
        route = g.num_vertices() <= 8 ? CriticalRoute::Enumerate : CriticalRoute::Refine;
    }
    return route == CriticalRoute::Enumerate ? finest_by_enumeration(g) : finest_by_refinement(g);
}

// ---- denseness ------------------------------------------------------------------------

void for_each_connected_subset(const Multigraph& g, const std::function<void(const VertexSet&)>& visit) {
    const int n = g.num_vertices();
    if (n > 63) throw Error(ErrorKind::TooManyVertices, "subset enumeration limited to 63 vertices");
    std::vector<std::uint64_t> nbr(n, 0);
    for (const auto& e : g.edges()) {
        nbr[e.u] |= std::uint64_t{1} << e.v;
        nbr[e.v] |= std::uint64_t{1} << e.u;
    }
    auto neighbourhood = [&](std::uint64_t set) {
        std::uint64_t out = 0;
        for (int v = 0; v < n; ++v) {
            if (set >> v & 1) out |= nbr[v];
        }
        return out;
    };
    auto to_set = [&](std::uint64_t set) {
        VertexSet s;
        for (int v = 0; v < n; ++v) {
            if (set >> v & 1) s.push_back(v);
        }
        return s;
    };
    // ESU: extensions only use vertices above the seed and outside the
    // current closed neighbourhood, so each subset is produced once.
    std::function<void(std::uint64_t, std::uint64_t, int)> extend = [&](std::uint64_t sub,
                                                                      std::uint64_t ext, int seed) {
        visit(to_set(sub));
        const std::uint64_t closed = sub | neighbourhood(sub);
        const std::uint64_t above = seed + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (seed + 1)) - 1);
        while (ext) {
            const int w = __builtin_ctzll(ext);
            ext &= ext - 1;
            const std::uint64_t fresh = nbr[w] & ~closed & above;
            extend(sub | (std::uint64_t{1} << w), ext | fresh, seed);
        }
    };
    for (int v = 0; v < n; ++v) {
        const std::uint64_t above = v + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (v + 1)) - 1);
        extend(std::uint64_t{1} << v, nbr[v] & above, v);
    }
}

DensenessResult max_denseness(const Multigraph& g, DensenessMethod method) {
    require_connected(g);
    if (g.num_edges() == 0) throw Error(ErrorKind::NoEdges, "max_denseness");
    DensenessResult out{denseness(g), 0, {}};

    if (method == DensenessMethod::BruteForce) {
        if (g.num_vertices() > kDefaultPartitionVertexCap) {
            throw Error(ErrorKind::TooManyVertices, std::to_string(g.num_vertices()));
        }
        bool found = false;
        for_each_connected_subset(g, [&](const VertexSet& s) {
            if (s.size() < 2) return;
            Multigraph h = induced_subgraph(g, s);
            Rational theta = denseness(h);
            bool better = !found || theta > out.dmax ||
                          (theta == out.dmax && (s.size() > out.witness.size() ||
                                                 (s.size() == out.witness.size() && s < out.witness)));
            if (better) {
                out.dmax = theta;
                out.witness = s;
                found = true;
            }
        });
        return out;
    }

    const auto scaled = scaled_usage(g, exact_eta_star(g));
    const Rational lowest = *std::min_element(scaled.begin(), scaled.end());
    out.dmax = 1 / lowest;
    EdgeSet e_min;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (scaled[e] == lowest) e_min.push_back(e);
    }
    std::vector<bool> use(g.num_edges(), false);
    for (int e : e_min) use[e] = true;
    auto labels = component_labels(g, use);
    const int root = labels[g.edge(e_min.front()).u];
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (labels[v] == root) out.witness.push_back(v);
    }
    return out;
}

}  // namespace treemod
