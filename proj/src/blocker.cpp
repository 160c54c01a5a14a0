#include "treemod/blocker.hpp"

#include <algorithm>
#include <set>

#include "treemod/linalg.hpp"
#include "treemod/modulus.hpp"
#include "treemod/polyhedron.hpp"

namespace treemod {

ExactDensity BlockerElement::usage(int num_edges) const {
    ExactDensity v(num_edges, 0);
    for (int e : cut) v[e] = usage_value;
    return v;
}

std::vector<BlockerElement> feasible_partition_vectors(const Multigraph& g, int vertex_cap) {
    require_connected(g);
    std::vector<BlockerElement> out;
    FeasiblePartitions it(g, vertex_cap);
    while (auto p = it.next()) {
        if (p->num_blocks() < 2) continue;
        BlockerElement el;
        el.cut = cut_set(g, *p);
        el.usage_value = Rational(1, p->num_blocks() - 1);
        el.biconnected_shrunk = is_vertex_biconnected(shrink(g, *p));
        el.partition = std::move(*p);
        out.push_back(std::move(el));
    }
    return out;
}

std::vector<BlockerElement> enumerate_blocker(const Multigraph& g, int vertex_cap) {
    std::vector<BlockerElement> out;
    std::set<std::pair<EdgeSet, Rational>> seen;
    for (auto& el : feasible_partition_vectors(g, vertex_cap)) {
        if (!el.biconnected_shrunk) continue;
        if (!seen.insert({el.cut, el.usage_value}).second) {
            throw Error(ErrorKind::InternalConsistency, "two blocker partitions share a usage vector");
        }
        out.push_back(std::move(el));
    }
    return out;
}

bool is_extreme_point(const Multigraph& g, const ExactDensity& v, std::size_t tree_cap) {
    require_connected(g);
    const int m = g.num_edges();
    if (static_cast<int>(v.size()) != m) throw Error(ErrorKind::InvalidArgument, "vector length");
    for (const auto& x : v) {
        if (x < 0) throw Error(ErrorKind::NotAdmissible, "negative entry");
    }
    if (minimum_spanning_tree(g, v).length < 1) {
        throw Error(ErrorKind::NotAdmissible, "some spanning tree has length below 1");
    }
    RationalMatrix tight;
    for (const auto& t : enumerate_spanning_trees(g, tree_cap)) {
        if (tree_length(t, v) != 1) continue;
        std::vector<Rational> row(m, 0);
        for (int e : t.edges) row[e] = 1;
        tight.push_back(std::move(row));
    }
    for (int e = 0; e < m; ++e) {
        if (v[e] != 0) continue;
        std::vector<Rational> row(m, 0);
        row[e] = 1;
        tight.push_back(std::move(row));
    }
    return exact_rank(std::move(tight)) == m;
}

DominantMembership dominant_membership(const Multigraph& g, const ExactDensity& eta, MembershipMode mode) {
    require_connected(g);
    if (static_cast<int>(eta.size()) != g.num_edges()) {
        throw Error(ErrorKind::InvalidArgument, "vector length");
    }
    if (mode == MembershipMode::Auto) {
        mode = g.num_vertices() <= 8 ? MembershipMode::Exhaustive : MembershipMode::Lp;
    }
    if (mode == MembershipMode::Exhaustive) {
        std::optional<Partition> worst;
        Rational worst_ratio;
        FeasiblePartitions it(g);
        while (auto p = it.next()) {
            if (p->num_blocks() < 2) continue;
            Rational load = 0;
            for (int e : cut_set(g, *p)) load += eta[e];
            Rational ratio = load / (p->num_blocks() - 1);
            bool better = !worst || ratio < worst_ratio ||
                          (ratio == worst_ratio && p->num_blocks() > worst->num_blocks());
            if (better) {
                worst = *p;
                worst_ratio = ratio;
            }
        }
        if (worst_ratio >= 1) return {true, std::nullopt};
        return {false, worst};
    }
    auto lp = mod1_exact(g, eta);
    if (lp.value >= 1) return {true, std::nullopt};
    EdgeSet support;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (lp.rho[e] != 0) support.push_back(e);
    }
    return {false, components_without(g, support)};
}

BlockerReport verify_blocker_small(const Multigraph& g, std::size_t tree_cap) {
    require_connected(g);
    const int m = g.num_edges();
    if (g.num_vertices() > 7 || m > 12) {
        throw Error(ErrorKind::TooLarge, "verify_blocker_small needs |V| <= 7 and |E| <= 12");
    }
    BlockerReport report;
    using VectorSet = std::set<std::vector<Rational>>;

    VectorSet blocker, by_rank, partition_vectors;
    for (const auto& el : feasible_partition_vectors(g)) {
        auto v = el.usage(m);
        partition_vectors.insert(v);
        if (el.biconnected_shrunk) blocker.insert(v);
        if (is_extreme_point(g, v, tree_cap)) by_rank.insert(v);
    }
    const auto trees = enumerate_spanning_trees(g, tree_cap);
    std::vector<std::vector<Rational>> tree_rows;
    for (const auto& t : trees) {
        std::vector<Rational> row(m, 0);
        for (int e : t.edges) row[e] = 1;
        tree_rows.push_back(std::move(row));
    }
    const auto vertices = blocking_polyhedron_vertices(tree_rows, m);
    VectorSet by_enumeration(vertices.begin(), vertices.end());

    report.blocker_size = blocker.size();
    report.extreme_by_rank = by_rank.size();
    report.extreme_by_enumeration = by_enumeration.size();
    report.rank_matches = by_rank == blocker;
    report.enumeration_matches = by_enumeration == blocker;
    report.vertices_are_partition_vectors =
        std::all_of(vertices.begin(), vertices.end(),
                    [&](const auto& v) { return partition_vectors.count(v) > 0; });

    std::vector<std::vector<Rational>> blocker_rows(blocker.begin(), blocker.end());
    const auto back = blocking_polyhedron_vertices(blocker_rows, m);
    VectorSet tree_set(tree_rows.begin(), tree_rows.end());
    report.reflexive = VectorSet(back.begin(), back.end()) == tree_set;

    if (!report.rank_matches) report.messages.push_back("rank test disagrees with biconnectivity");
    if (!report.enumeration_matches) {
        report.messages.push_back("vertex enumeration disagrees with biconnectivity");
    }
    if (!report.vertices_are_partition_vectors) {
        report.messages.push_back("a vertex of Adm(Gamma) is not a partition vector");
    }
    if (!report.reflexive) report.messages.push_back("blocker of the blocker is not the tree family");
    report.ok = report.rank_matches && report.enumeration_matches &&
                report.vertices_are_partition_vectors && report.reflexive;
    return report;
}

}  // namespace treemod
