#include "treemod/beurling.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treemod {

namespace {

int cut_count(const Multigraph& g, const Partition& p, const EdgeSet& tree) {
    int c = 0;
    for (int e : tree) {
        if (p.block_of(g.edge(e).u) != p.block_of(g.edge(e).v)) ++c;
    }
    return c;
}

// Trees of a piece, one empty tree for a single vertex.
std::vector<SpanningTree> piece_trees(const Multigraph& piece, std::size_t cap) {
    if (piece.num_vertices() == 1) return {SpanningTree{}};
    return enumerate_spanning_trees(piece, cap);
}

EdgeSet to_parent(const Multigraph& parent, const Multigraph& piece, const EdgeSet& local) {
    EdgeSet out;
    out.reserve(local.size());
    for (int e : local) out.push_back(parent.local_edge(piece.edge(e).id));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet to_piece(const Multigraph& parent, const Multigraph& piece, const EdgeSet& local) {
    EdgeSet out;
    out.reserve(local.size());
    for (int e : local) out.push_back(piece.local_edge(parent.edge(e).id));
    std::sort(out.begin(), out.end());
    return out;
}

class Deflater {
  public:
    Deflater(const Multigraph& g, const ExactDensity& eta) {
        if (static_cast<int>(eta.size()) != g.num_edges()) {
            throw Error(ErrorKind::InvalidArgument, "eta* length does not match the graph");
        }
        for (int e = 0; e < g.num_edges(); ++e) level_[g.edge(e).id] = eta[e] / g.sigma(e);
    }

    DecompositionNode pmax(const Multigraph& h, DecompositionNode::Kind kind) const {
        if (auto leaf = terminal_if_homogeneous(h, kind)) return std::move(*leaf);
        const auto levels = levels_of(h);
        const Rational top = *std::max_element(levels.begin(), levels.end());
        EdgeSet e_max;
        for (int e = 0; e < h.num_edges(); ++e) {
            if (levels[e] == top) e_max.push_back(e);
        }
        const Partition p = components_without(h, e_max);
        if (cut_set(h, p) != e_max) {
            throw Error(ErrorKind::InternalConsistency, "E_max is not the cut set of its components");
        }
        DecompositionNode node = terminal(shrink(h, p), DecompositionNode::Kind::ShrunkGraph, top);
        for (const auto& block : p.blocks()) {
            node.children.push_back(pmax(induced_subgraph(h, block), DecompositionNode::Kind::BlockSubgraph));
        }
        return node;
    }

    DecompositionNode pmin(const Multigraph& h, DecompositionNode::Kind kind) const {
        if (auto leaf = terminal_if_homogeneous(h, kind)) return std::move(*leaf);
        const auto levels = levels_of(h);
        const Rational bottom = *std::min_element(levels.begin(), levels.end());
        std::vector<bool> use(h.num_edges(), false);
        EdgeSet rest;
        for (int e = 0; e < h.num_edges(); ++e) {
            use[e] = levels[e] == bottom;
            if (!use[e]) rest.push_back(e);
        }
        const Partition p = Partition::from_labels(component_labels(h, use));
        if (cut_set(h, p) != rest) {
            throw Error(ErrorKind::InternalConsistency, "H_min components contain a non-minimal edge");
        }
        DecompositionNode node;
        node.kind = kind;
        node.piece = h;
        for (const auto& block : p.blocks()) {
            auto sub = induced_subgraph(h, block);
            auto leaf = terminal_if_homogeneous(sub, DecompositionNode::Kind::BlockSubgraph);
            if (!leaf) throw Error(ErrorKind::InternalConsistency, "H_min component is not homogeneous");
            node.children.push_back(std::move(*leaf));
        }
        node.children.push_back(pmin(shrink(h, p), DecompositionNode::Kind::ShrunkGraph));
        return node;
    }

  private:
    std::vector<Rational> levels_of(const Multigraph& h) const {
        std::vector<Rational> out(h.num_edges());
        for (int e = 0; e < h.num_edges(); ++e) {
            auto it = level_.find(h.edge(e).id);
            if (it == level_.end()) throw Error(ErrorKind::UnknownEdgeId, std::to_string(h.edge(e).id));
            out[e] = it->second;
        }
        return out;
    }

    std::optional<DecompositionNode> terminal_if_homogeneous(const Multigraph& h,
                                                             DecompositionNode::Kind kind) const {
        if (h.num_edges() == 0) {
            DecompositionNode leaf;
            leaf.kind = kind;
            leaf.piece = h;
            leaf.terminal = true;
            return leaf;
        }
        const auto levels = levels_of(h);
        for (const auto& x : levels) {
            if (x != levels.front()) return std::nullopt;
        }
        return terminal(h, kind, levels.front());
    }

    DecompositionNode terminal(Multigraph h, DecompositionNode::Kind kind, const Rational& level) const {
        DecompositionNode node;
        node.kind = kind;
        node.level = level;
        node.terminal = true;
        Rational energy = 0;
        for (int e = 0; e < h.num_edges(); ++e) energy += level * level * h.sigma(e);
        const Rational n1 = h.num_vertices() - 1;
        if (energy != n1 * n1 / h.total_sigma()) {
            throw Error(ErrorKind::InternalConsistency, "homogeneous piece has the wrong MEO");
        }
        node.meo_contribution = energy;
        node.piece = std::move(h);
        return node;
    }

    std::map<int, Rational> level_;
};

void collect_terminals(const DecompositionNode& node, std::vector<const DecompositionNode*>& out) {
    if (node.terminal) out.push_back(&node);
    for (const auto& c : node.children) collect_terminals(c, out);
}

}  // namespace

bool is_beurling(const Multigraph& g, const Partition& p, const ExactDensity& eta_star) {
    const auto info = cut_set_and_feasibility(g, p);
    if (!info.feasible) throw Error(ErrorKind::InfeasiblePartition, "partition has a disconnected block");
    if (p.num_blocks() < 2) throw Error(ErrorKind::TrivialSinglePartition, "partition has one block");
    Rational load = 0;
    for (int e : info.cut) load += eta_star[e];
    return load == p.num_blocks() - 1;
}

bool beurling_fairtree_oracle(const Multigraph& g, const Partition& p, std::size_t tree_cap) {
    if (!is_feasible(g, p)) throw Error(ErrorKind::InfeasiblePartition, "partition has a disconnected block");
    return beurling_fairtree_oracle(g, p, fair_trees_small(g, tree_cap));
}

bool beurling_fairtree_oracle(const Multigraph& g, const Partition& p, const std::vector<SpanningTree>& fair) {
    if (!is_feasible(g, p)) throw Error(ErrorKind::InfeasiblePartition, "partition has a disconnected block");
    for (const auto& t : fair) {
        if (cut_count(g, p, t.edges) != p.num_blocks() - 1) return false;
    }
    return true;
}

bool restriction_property_oracle(const Multigraph& g, const Partition& p, std::size_t tree_cap) {
    if (!is_feasible(g, p)) throw Error(ErrorKind::InfeasiblePartition, "partition has a disconnected block");
    return restriction_property_oracle(g, p, fair_trees_small(g, tree_cap));
}

bool restriction_property_oracle(const Multigraph& g, const Partition& p, const std::vector<SpanningTree>& fair) {
    if (!is_feasible(g, p)) throw Error(ErrorKind::InfeasiblePartition, "partition has a disconnected block");
    for (const auto& t : fair) {
        std::vector<int> inside(p.num_blocks(), 0);
        for (int e : t.edges) {
            const int b = p.block_of(g.edge(e).u);
            if (b == p.block_of(g.edge(e).v)) ++inside[b];
        }
        for (int b = 0; b < p.num_blocks(); ++b) {
            if (inside[b] != static_cast<int>(p.block(b).size()) - 1) return false;
        }
    }
    return true;
}

ExtremalPartitions extremal_partitions(const Multigraph& g, const SolverSettings& settings) {
    require_connected(g);
    ExtremalPartitions out;
    out.eta_star = exact_eta_star(g, settings.engine, settings);
    const auto levels = scaled_usage(g, out.eta_star);
    out.sets.eta_min = *std::min_element(levels.begin(), levels.end());
    out.sets.eta_max = *std::max_element(levels.begin(), levels.end());
    std::vector<bool> use(g.num_edges(), false);
    EdgeSet rest;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (levels[e] == out.sets.eta_min) {
            out.sets.e_min.push_back(e);
            use[e] = true;
        } else {
            rest.push_back(e);
        }
        if (levels[e] == out.sets.eta_max) out.sets.e_max.push_back(e);
    }
    out.p_min = Partition::from_labels(component_labels(g, use));
    out.p_max = components_without(g, out.sets.e_max);
    if (cut_set(g, out.p_min) != rest) {
        throw Error(ErrorKind::InternalConsistency, "cut set of P_min differs from E \\ E_min");
    }
    if (cut_set(g, out.p_max) != out.sets.e_max) {
        throw Error(ErrorKind::InternalConsistency, "cut set of P_max differs from E_max");
    }
    for (const Partition* p : {&out.p_min, &out.p_max}) {
        if (p->num_blocks() >= 2 && !is_beurling(g, *p, out.eta_star)) {
            throw Error(ErrorKind::InternalConsistency, "extremal partition is not Beurling");
        }
    }
    return out;
}

const char* to_string(DeflationStrategy s) { return s == DeflationStrategy::PMin ? "pmin" : "pmax"; }

const char* to_string(DecompositionNode::Kind kind) {
    return kind == DecompositionNode::Kind::BlockSubgraph ? "block_subgraph" : "shrunk_graph";
}

DecompositionNode deflate(const Multigraph& g, DeflationStrategy strategy, const ExactDensity& eta_star) {
    require_connected(g);
    Deflater d(g, eta_star);
    auto root = strategy == DeflationStrategy::PMax ? d.pmax(g, DecompositionNode::Kind::BlockSubgraph)
                                                     : d.pmin(g, DecompositionNode::Kind::BlockSubgraph);
    std::vector<int> ids;
    int rank = 0;
    for (const auto* t : terminal_pieces(root)) {
        for (const auto& e : t->piece.edges()) ids.push_back(e.id);
        rank += t->piece.num_vertices() - 1;
    }
    std::sort(ids.begin(), ids.end());
    std::vector<int> all;
    for (const auto& e : g.edges()) all.push_back(e.id);
    std::sort(all.begin(), all.end());
    if (ids != all || rank != g.num_vertices() - 1) {
        throw Error(ErrorKind::InternalConsistency, "terminal pieces do not partition the graph");
    }
    return root;
}

DecompositionNode deflate(const Multigraph& g, DeflationStrategy strategy, const SolverSettings& settings) {
    require_connected(g);
    return deflate(g, strategy, exact_eta_star(g, settings.engine, settings));
}

std::vector<const DecompositionNode*> terminal_pieces(const DecompositionNode& root) {
    std::vector<const DecompositionNode*> out;
    collect_terminals(root, out);
    return out;
}

Rational total_meo(const DecompositionNode& root) {
    Rational sum = 0;
    for (const auto* t : terminal_pieces(root)) sum += t->meo_contribution;
    return sum;
}

std::vector<std::pair<Rational, std::vector<int>>> leaf_signature(const DecompositionNode& root) {
    std::vector<std::pair<Rational, std::vector<int>>> out;
    for (const auto* t : terminal_pieces(root)) {
        if (t->piece.num_edges() == 0) continue;
        std::vector<int> ids;
        for (const auto& e : t->piece.edges()) ids.push_back(e.id);
        std::sort(ids.begin(), ids.end());
        out.emplace_back(denseness(t->piece), std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multigraph> serial_pieces(const Multigraph& g, const Partition& p) {
    std::vector<Multigraph> out;
    for (const auto& block : p.blocks()) out.push_back(induced_subgraph(g, block));
    out.push_back(shrink(g, p));
    return out;
}

GammaP gamma_P_oracle(const Multigraph& g, const Partition& p, std::size_t tree_cap) {
    if (!is_feasible(g, p)) throw Error(ErrorKind::InfeasiblePartition, "partition has a disconnected block");
    GammaP out;
    out.partition = p;
    const int k = p.num_blocks();
    for (const auto& t : enumerate_spanning_trees(g, tree_cap)) {
        if (cut_count(g, p, t.edges) == k - 1) out.trees.push_back(t);
    }
    const auto pieces = serial_pieces(g, p);
    out.product_count = 1;
    out.block_restrictions_ok = true;
    for (int i = 0; i <= k; ++i) {
        const auto& piece = pieces[i];
        std::set<EdgeSet> expected;
        for (const auto& t : piece_trees(piece, tree_cap)) expected.insert(to_parent(g, piece, t.edges));
        out.product_count *= static_cast<long>(expected.size());
        std::set<EdgeSet> restricted;
        for (const auto& t : out.trees) {
            EdgeSet r;
            for (int e : t.edges) {
                const int bu = p.block_of(g.edge(e).u), bv = p.block_of(g.edge(e).v);
                const bool in_piece = i < k ? (bu == i && bv == i) : bu != bv;
                if (in_piece) r.push_back(e);
            }
            restricted.insert(std::move(r));
        }
        if (i < k) {
            out.block_restrictions_ok = out.block_restrictions_ok && restricted == expected;
        } else {
            out.shrunk_restriction_ok = restricted == expected;
        }
    }
    out.count_ok = BigInt(out.trees.size()) == out.product_count;
    return out;
}

template <class T>
BasicTreePmf<T> serial_pmf(const Multigraph& g, const Partition& p, const ExactDensity& eta_star,
                           const std::vector<BasicTreePmf<T>>& block_pmfs, const BasicTreePmf<T>& shrunk_pmf,
                           std::size_t support_cap) {
    if (p.num_blocks() < 2 || !is_beurling(g, p, eta_star)) {
        throw Error(ErrorKind::PartitionNotBeurling, "serial rule needs a Beurling partition");
    }
    const int k = p.num_blocks();
    if (static_cast<int>(block_pmfs.size()) != k) {
        throw Error(ErrorKind::InvalidArgument, "one pmf per block is required");
    }
    const auto pieces = serial_pieces(g, p);
    std::vector<const BasicTreePmf<T>*> inputs;
    for (const auto& pmf : block_pmfs) inputs.push_back(&pmf);
    inputs.push_back(&shrunk_pmf);

    std::size_t support = 1;
    for (const auto* pmf : inputs) {
        if (pmf->size() == 0) throw Error(ErrorKind::InvalidArgument, "empty pmf");
        if (support > support_cap / pmf->size()) {
            throw Error(ErrorKind::TooManyTrees, "product support exceeds " + std::to_string(support_cap));
        }
        support *= pmf->size();
    }
    std::vector<std::vector<EdgeSet>> mapped(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (const auto& t : inputs[i]->trees) mapped[i].push_back(to_parent(g, pieces[i], t.edges));
    }

    BasicTreePmf<T> out;
    std::vector<std::size_t> idx(inputs.size(), 0);
    for (std::size_t n = 0; n < support; ++n) {
        EdgeSet edges;
        T w = T(1);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            edges.insert(edges.end(), mapped[i][idx[i]].begin(), mapped[i][idx[i]].end());
            w *= inputs[i]->weights[idx[i]];
        }
        std::sort(edges.begin(), edges.end());
        if (!is_spanning_tree(g, edges) || cut_count(g, p, edges) != k - 1) {
            throw Error(ErrorKind::SupportNotInGammaP, "piece trees do not concatenate to a tree of Gamma^P");
        }
        out.trees.push_back(SpanningTree{std::move(edges)});
        out.weights.push_back(w);
        for (std::size_t i = inputs.size(); i-- > 0;) {
            if (++idx[i] < inputs[i]->size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

template <class T>
SerialMarginals<T> marginal_pmfs(const Multigraph& g, const Partition& p, const BasicTreePmf<T>& pmf) {
    const int k = p.num_blocks();
    const auto pieces = serial_pieces(g, p);
    std::vector<std::map<EdgeSet, T>> acc(k + 1);
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        const auto& tree = pmf.trees[n].edges;
        if (!is_spanning_tree(g, tree) || cut_count(g, p, tree) != k - 1) {
            throw Error(ErrorKind::SupportNotInGammaP, "pmf charges a tree outside Gamma^P");
        }
        std::vector<EdgeSet> parts(k + 1);
        for (int e : tree) {
            const int bu = p.block_of(g.edge(e).u), bv = p.block_of(g.edge(e).v);
            parts[bu == bv ? bu : k].push_back(e);
        }
        for (int i = 0; i <= k; ++i) {
            auto key = to_piece(g, pieces[i], parts[i]);
            auto it = acc[i].find(key);
            if (it == acc[i].end()) {
                acc[i].emplace(std::move(key), pmf.weights[n]);
            } else {
                it->second += pmf.weights[n];
            }
        }
    }
    SerialMarginals<T> out;
    out.blocks.resize(k);
    for (int i = 0; i <= k; ++i) {
        auto& dst = i < k ? out.blocks[i] : out.shrunk;
        for (auto& [edges, w] : acc[i]) {
            dst.trees.push_back(SpanningTree{edges});
            dst.weights.push_back(w);
        }
    }
    return out;
}

template BasicTreePmf<double> serial_pmf(const Multigraph&, const Partition&, const ExactDensity&,
                                         const std::vector<BasicTreePmf<double>>&, const BasicTreePmf<double>&,
                                         std::size_t);
template BasicTreePmf<Rational> serial_pmf(const Multigraph&, const Partition&, const ExactDensity&,
                                           const std::vector<BasicTreePmf<Rational>>&,
                                           const BasicTreePmf<Rational>&, std::size_t);
template SerialMarginals<double> marginal_pmfs(const Multigraph&, const Partition&, const BasicTreePmf<double>&);
template SerialMarginals<Rational> marginal_pmfs(const Multigraph&, const Partition&,
                                                 const BasicTreePmf<Rational>&);

}  // namespace treemod
