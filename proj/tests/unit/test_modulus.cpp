#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "random_graphs.hpp"
#include "treemod/fixtures.hpp"
#include "treemod/modulus.hpp"

using namespace treemod;

namespace {

SolverSettings with_engine(Engine e) {
    SolverSettings s;
    s.engine = e;
    return s;
}

Multigraph weighted_path() { return fixture("path3").with_sigma({1, 2}); }

}  // namespace

TEST_CASE("2-modulus on small graphs") {
    auto c3 = mod2_solve(fixture("c3"), with_engine(Engine::Exact));
    CHECK(c3.value == doctest::Approx(0.75));
    CHECK(*c3.exact_value == Rational(3, 4));
    for (const auto& r : *c3.exact_rho_star) CHECK(r == Rational(1, 2));
    for (const auto& x : *c3.exact_eta_star) CHECK(x == Rational(2, 3));
    CHECK(c3.kkt_residual <= 1e-9);

    auto path = mod2_solve(weighted_path(), with_engine(Engine::Exact));
    CHECK(*path.exact_value == Rational(2, 3));
    CHECK(*path.exact_rho_star == ExactDensity{Rational(2, 3), Rational(1, 3)});
    CHECK(*path.exact_eta_star == ExactDensity{1, 1});
    CHECK(path.rho_star[0] == doctest::Approx(2.0 / 3));

    auto edge = mod2_solve(Multigraph::from_pairs(2, {{0, 1}}));
    CHECK(edge.value == doctest::Approx(1));
    CHECK(edge.rho_star[0] == doctest::Approx(1));
    CHECK(edge.eta_star[0] == doctest::Approx(1));
}

TEST_CASE("1-modulus") {
    auto c3 = mod1_solve(fixture("c3"));
    CHECK(*c3.exact_value == Rational(3, 2));
    for (const auto& r : *c3.exact_rho_star) CHECK(r == Rational(1, 2));

    auto theta = mod1_solve(fixture("theta2"));
    CHECK(*theta.exact_value == 3);
    for (const auto& r : *theta.exact_rho_star) CHECK(r == 1);

    auto path = mod1_solve(weighted_path());
    CHECK(*path.exact_value == 1);
    CHECK(*path.exact_rho_star == ExactDensity{1, 0});
}

TEST_CASE("exact eta* on fixtures") {
    auto fig = fixture("fig1");
    auto classes = figure_one_classes();
    for (auto engine : {Engine::Exact, Engine::Hybrid}) {
        auto eta = exact_eta_star(fig, engine);
        for (int e : classes.clique) CHECK(eta[e] == Rational(1, 3));
        for (int e : classes.ring) CHECK(eta[e] == Rational(1, 2));
        for (int e : classes.connector) CHECK(eta[e] == Rational(2, 3));
    }
    for (const auto& x : exact_eta_star(fixture("bowtie"))) CHECK(x == Rational(2, 3));
    auto path = exact_eta_star(weighted_path());
    CHECK(path == ExactDensity{1, 1});
    CHECK(scaled_usage(weighted_path(), path) == ExactDensity{1, Rational(1, 2)});
}

TEST_CASE("engines agree") {
    std::mt19937 rng(41);
    for (const auto& [name, g] : corpus()) {
        auto exact = exact_eta_star(g, Engine::Exact);
        auto hybrid = exact_eta_star(g, Engine::Hybrid);
        CHECK_MESSAGE(exact == hybrid, name);
        if (g.num_vertices() <= 12) CHECK(certify_eta_star(g, exact));
        CHECK(certify_by_levels(g, exact));
        auto numeric = mod2_solve(g, with_engine(Engine::Numeric));
        for (int e = 0; e < g.num_edges(); ++e) CHECK(numeric.eta_star[e] == doctest::Approx(to_double(exact[e])).epsilon(1e-6));
    }
    for (int trial = 0; trial < 40; ++trial) {
        auto g0 = testing::random_connected(rng, 8, 6);
        auto g = trial % 2 ? g0 : g0.with_sigma(testing::random_sigma(rng, g0.num_edges()));
        auto exact = exact_eta_star(g, Engine::Exact);
        CHECK(exact == exact_eta_star(g, Engine::Hybrid));
        CHECK(exact == eta_star_by_deflation(g, CriticalRoute::Refine));
        CHECK(certify_eta_star(g, exact));
    }
}

TEST_CASE("certificates reject wrong densities") {
    auto g = fixture("bowtie");
    ExactDensity uniform(6, Rational(2, 3));
    CHECK(certify_eta_star(g, uniform));
    ExactDensity skewed = uniform;
    skewed[0] += Rational(1, 3);
    skewed[3] -= Rational(1, 3);
    CHECK_FALSE(certify_eta_star(g, skewed));
    CHECK_FALSE(certify_by_levels(g, skewed));
}

TEST_CASE("MEO") {
    auto fig = meo_solve(fixture("fig1"));
    CHECK(fig.value == Rational(46, 3));
    CHECK(meo_solve(fixture("path3")).value == 2);
    CHECK(meo_solve(fixture("k4")).value == Rational(3, 2));
}

TEST_CASE("expected overlap of the solver pmf matches MEO") {
    for (const auto& [name, g] : corpus()) {
        if (g.num_vertices() > 8) continue;
        auto meo = meo_solve(g);
        CHECK_MESSAGE(expected_overlap(g, meo.mu) == doctest::Approx(to_double(meo.value)).epsilon(1e-7), name);
        auto exact = exact_optimal_pmf(g);
        CHECK(expected_overlap(g, exact) == meo.value);
    }
}

TEST_CASE("KKT verification") {
    auto g = fixture("c3");
    auto sol = mod2_solve(g);
    CHECK(verify_kkt(g, sol.rho_star, sol.eta_star, sol.mu, 1e-9).ok);

    Density rho(3, 0.5), eta(3, 0.5);
    auto bad = verify_kkt(g, rho, eta, sol.mu, 1e-9);
    CHECK_FALSE(bad.ok);
    bool proportionality = false;
    for (const auto& v : bad.violations) proportionality = proportionality || v.condition == "(ii) proportionality";
    CHECK(proportionality);

    // Mass on a tree that is not tight.
    Density loose{0.5, 0.5, 1.0};
    TreePmf mu;
    mu.trees = {SpanningTree{{1, 2}}};
    mu.weights = {1.0};
    Density eta2{0, 1, 1};
    auto slack = verify_kkt(g, loose, eta2, mu, 1e-9);
    bool found = false;
    for (const auto& v : slack.violations) found = found || v.condition == "(iii) slackness";
    CHECK(found);
}

TEST_CASE("homogeneity") {
    auto k4 = is_homogeneous(fixture("k4"));
    CHECK(k4.homogeneous);
    REQUIRE(k4.by_conic.has_value());
    CHECK(*k4.by_conic);

    auto fig = is_homogeneous(fixture("fig1"));
    CHECK_FALSE(fig.homogeneous);
    CHECK(fig.separating.has_value());

    auto path = is_homogeneous(weighted_path());
    CHECK_FALSE(path.homogeneous);
    CHECK_FALSE(*path.by_conic);
}

TEST_CASE("conic decompositions reproduce sigma") {
    for (const auto& [name, g] : corpus()) {
        if (g.num_vertices() > 6) continue;
        auto cone = conic_decomposition(g, kDefaultTreeCap);
        if (!cone) continue;
        std::vector<Rational> sum(g.num_edges(), 0);
        for (std::size_t i = 0; i < cone->size(); ++i) {
            for (int e : cone->trees[i].edges) sum[e] += cone->weights[i];
        }
        CHECK_MESSAGE(sum == g.sigma(), name);
    }
}

TEST_CASE("fair trees") {
    CHECK(fair_trees_small(fixture("c3")).size() == 3);
    CHECK(fair_trees_small(fixture("path3")).size() == 1);
    CHECK(fair_trees_small(fixture("bowtie")).size() == 9);
}

TEST_CASE("n_sigma sums to |V|-1") {
    for (const auto& [name, g] : corpus()) {
        Rational sum = 0;
        for (const auto& x : n_sigma(g)) sum += x;
        CHECK(sum == g.num_vertices() - 1);
    }
}

TEST_CASE("trees are handled in closed form") {
    auto g = Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {1, 3}}).with_sigma({1, 2, 4});
    auto sol = mod2_solve(g, with_engine(Engine::Exact));
    for (double x : sol.eta_star) CHECK(x == doctest::Approx(1));
    // rho proportional to 1/sigma with length one.
    CHECK(*sol.exact_rho_star == ExactDensity{Rational(4, 7), Rational(2, 7), Rational(1, 7)});
}
