#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "treemod/fixtures.hpp"
#include "treemod/graph.hpp"
#include "treemod/partition_ops.hpp"

using namespace treemod;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalConsistency;
}

Partition blocks(const Multigraph& g, std::vector<std::vector<std::string>> names) {
    std::vector<VertexSet> out;
    for (auto& b : names) {
        VertexSet s;
        for (auto& n : b) s.push_back(g.find_vertex(n));
        std::sort(s.begin(), s.end());
        out.push_back(s);
    }
    return Partition::from_blocks(g.num_vertices(), out);
}

}  // namespace

TEST_CASE("parse_graph reads edge lists") {
    auto g = parse_graph("a b\nb c");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.unit_weights());

    auto w = parse_graph("# weighted\nu v 3/2\n");
    CHECK(w.num_vertices() == 2);
    CHECK(w.sigma(0) == Rational(3, 2));

    auto d = parse_graph("x y 0.25  # decimal\n");
    CHECK(d.sigma(0) == Rational(1, 4));
    CHECK(parse_rational("010/08") == Rational(5, 4));
    CHECK(parse_rational("007.50") == Rational(15, 2));
}

TEST_CASE("parse_graph errors") {
    CHECK(kind_of([] { parse_graph("u u"); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { parse_graph("a b 1/0"); }) == ErrorKind::BadRational);
    CHECK(kind_of([] { parse_graph("a b x"); }) == ErrorKind::BadRational);
    CHECK(kind_of([] { parse_graph("a b -2"); }) == ErrorKind::NonPositiveWeight);
    CHECK(kind_of([] { parse_graph("a b 0"); }) == ErrorKind::NonPositiveWeight);
    CHECK(kind_of([] { parse_graph("# nothing\n\n"); }) == ErrorKind::EmptyGraph);
}

TEST_CASE("serialize and parse round trip") {
    for (const auto& [name, g] : corpus()) {
        auto h = parse_graph(serialize_graph(g));
        REQUIRE(h.num_edges() == g.num_edges());
        CHECK(h.num_vertices() == g.num_vertices());
        for (int e = 0; e < g.num_edges(); ++e) {
            CHECK(h.edge(e).id == g.edge(e).id);
            CHECK(h.vertex_name(h.edge(e).u) == g.vertex_name(g.edge(e).u));
            CHECK(h.vertex_name(h.edge(e).v) == g.vertex_name(g.edge(e).v));
            CHECK(h.sigma(e) == g.sigma(e));
        }
    }
}

TEST_CASE("induced_subgraph") {
    auto bow = fixture("bowtie");
    auto tri = induced_subgraph(bow, {2, 3, 4});
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);
    CHECK(tri.edge(0).id == 3);

    auto k4 = fixture("k4");
    auto one = induced_subgraph(k4, {0});
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_edges() == 0);

    auto path = fixture("path3");
    auto ends = induced_subgraph(path, {0, 2});
    CHECK(ends.num_edges() == 0);
    CHECK_FALSE(is_connected(ends));

    CHECK(kind_of([&] { induced_subgraph(path, {}); }) == ErrorKind::EmptyVertexSet);
}

TEST_CASE("shrink") {
    auto bow = fixture("bowtie");
    auto p = blocks(bow, {{"a"}, {"b"}, {"c", "d", "e"}});
    auto s = shrink(bow, p);
    CHECK(s.num_vertices() == 3);
    CHECK(bow.edge_ids({0, 1, 2}) == std::vector<int>{0, 1, 2});
    CHECK(s.num_edges() == 3);
    for (int e = 0; e < 3; ++e) CHECK(s.edge(e).id == e);

    auto k4 = fixture("k4");
    auto q = blocks(k4, {{"1", "2"}, {"3"}, {"4"}});
    auto t = shrink(k4, q);
    CHECK(t.num_vertices() == 3);
    CHECK(t.num_edges() == 5);

    auto id = shrink(k4, Partition::singletons(4));
    CHECK(id.num_edges() == k4.num_edges());
    for (int e = 0; e < k4.num_edges(); ++e) {
        CHECK(id.edge(e).id == k4.edge(e).id);
        CHECK(id.edge(e).u == k4.edge(e).u);
        CHECK(id.edge(e).v == k4.edge(e).v);
    }

    CHECK(kind_of([] { Partition::from_blocks(3, {{0}, {1}}); }) == ErrorKind::BlocksDoNotCoverV);
}

TEST_CASE("cut sets and feasibility") {
    auto path = fixture("path3");
    auto info = cut_set_and_feasibility(path, blocks(path, {{"a", "c"}, {"b"}}));
    CHECK(info.cut == EdgeSet{0, 1});
    CHECK_FALSE(info.feasible);

    auto c3 = fixture("c3");
    auto all = cut_set_and_feasibility(c3, Partition::singletons(3));
    CHECK(all.cut == EdgeSet{0, 1, 2});
    CHECK(all.feasible);

    auto fig = fixture("fig1");
    std::vector<int> labels(36);
    for (int v = 0; v < 36; ++v) labels[v] = v / 12;
    auto three = cut_set_and_feasibility(fig, Partition::from_labels(labels));
    CHECK(three.feasible);
    CHECK(three.cut == EdgeSet{81, 82, 83});
}

TEST_CASE("partition_weight") {
    auto c3 = fixture("c3");
    CHECK(partition_weight(c3, Partition::singletons(3)) == Rational(3, 2));

    auto path = fixture("path3").with_sigma({1, 2});
    CHECK(partition_weight(path, blocks(path, {{"a"}, {"b", "c"}})) == 1);

    auto fig = fixture("fig1");
    std::vector<int> labels(36);
    for (int v = 0; v < 36; ++v) labels[v] = v / 12;
    CHECK(partition_weight(fig, Partition::from_labels(labels)) == Rational(3, 2));

    CHECK(kind_of([&] { partition_weight(c3, Partition::whole(3)); }) == ErrorKind::TrivialSinglePartition);
    auto p3 = fixture("path3");
    CHECK(kind_of([&] { partition_weight(p3, blocks(p3, {{"a", "c"}, {"b"}})); }) ==
          ErrorKind::InfeasiblePartition);
}

TEST_CASE("vertex biconnectivity") {
    CHECK_FALSE(is_vertex_biconnected(fixture("bowtie")));
    CHECK(is_vertex_biconnected(Multigraph::from_pairs(2, {{0, 1}})));
    CHECK(is_vertex_biconnected(fixture("c3")));
    CHECK(is_vertex_biconnected(fixture("theta2")));
    CHECK_FALSE(is_vertex_biconnected(fixture("path3")));
    CHECK(is_vertex_biconnected(fixture("wheel7")));
    CHECK_FALSE(is_vertex_biconnected(Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})));
}

TEST_CASE("is_finer") {
    auto bow = fixture("bowtie");
    auto p = blocks(bow, {{"a"}, {"b"}, {"c", "d", "e"}});
    auto q = blocks(bow, {{"a", "b"}, {"c", "d", "e"}});
    CHECK(is_finer(Partition::singletons(5), p));
    CHECK(is_finer(p, q));
    CHECK_FALSE(is_finer(q, p));
    CHECK(kind_of([&] { is_finer(p, Partition::singletons(4)); }) == ErrorKind::MismatchedVertexSets);
}

TEST_CASE("refinement matches cut-set inclusion") {
    for (const auto& [name, g] : corpus()) {
        if (g.num_vertices() > 6) continue;
        auto parts = enumerate_feasible_partitions(g);
        for (const auto& p : parts) {
            auto cp = cut_set(g, p);
            for (const auto& q : parts) {
                auto cq = cut_set(g, q);
                bool included = std::includes(cp.begin(), cp.end(), cq.begin(), cq.end());
                CHECK_MESSAGE(is_finer(p, q) == included, name);
            }
        }
    }
}

TEST_CASE("shrunk and block pieces partition the edges") {
    for (const auto& [name, g] : corpus()) {
        if (g.num_vertices() > 6) continue;
        for (const auto& p : enumerate_feasible_partitions(g)) {
            auto s = shrink(g, p);
            CHECK(s.num_edges() == static_cast<int>(cut_set(g, p).size()));
            CHECK(is_connected(s));
            int total = s.num_edges();
            for (const auto& b : p.blocks()) total += induced_subgraph(g, b).num_edges();
            CHECK(total == g.num_edges());
        }
    }
}

TEST_CASE("disconnected input is rejected") {
    auto g = Multigraph::from_pairs(4, {{0, 1}, {2, 3}});
    CHECK(kind_of([&] { require_connected(g); }) == ErrorKind::Disconnected);
    CHECK(kind_of([&] { strength(g); }) == ErrorKind::Disconnected);
}
