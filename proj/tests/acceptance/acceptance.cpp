#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "random_graphs.hpp"
#include "treemod/beurling.hpp"
#include "treemod/blocker.hpp"
#include "treemod/fixtures.hpp"
#include "treemod/modulus.hpp"
#include "treemod/partition_ops.hpp"
#include "treemod/report.hpp"

using namespace treemod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failures of a criterion.
class Check {
  public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (ok) return;
        ++failed_;
        if (notes_.size() < 5) notes_.push_back(what);
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        if (ok()) {
            os << count_ << " checks";
        } else {
            os << failed_ << "/" << count_ << " checks failed";
            for (const auto& n : notes_) os << "; " << n;
        }
        return os.str();
    }

  private:
    std::size_t count_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> notes_;
};

std::string str(const Rational& r) { return format_rational(r); }

std::vector<NamedGraph> corpus_upto(int max_vertices) {
    std::vector<NamedGraph> out;
    for (auto& ng : corpus()) {
        if (ng.graph.num_vertices() <= max_vertices) out.push_back(std::move(ng));
    }
    return out;
}

Rational max_of(const ExactDensity& v) { return *std::max_element(v.begin(), v.end()); }
Rational min_of(const ExactDensity& v) { return *std::min_element(v.begin(), v.end()); }

Rational exact_meo(const Multigraph& g) {
    if (g.num_edges() == 0) return 0;
    return weighted_energy(g, exact_eta_star(g));
}

ExactTreePmf optimal_pmf(const Multigraph& g) {
    if (g.num_vertices() == 1) {
        ExactTreePmf pmf;
        pmf.trees = {SpanningTree{}};
        pmf.weights = {Rational(1)};
        return pmf;
    }
    return exact_optimal_pmf(g);
}

// Positive combination of random spanning trees that covers every edge.
std::vector<Rational> conic_sigma(std::mt19937& rng, const Multigraph& g) {
    const auto trees = enumerate_spanning_trees(g);
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    std::uniform_int_distribution<int> num(1, 5), den(1, 3);
    std::vector<Rational> sigma(g.num_edges(), 0);
    auto covered = [&] {
        return std::all_of(sigma.begin(), sigma.end(), [](const Rational& x) { return x > 0; });
    };
    while (!covered()) {
        const auto& t = trees[pick(rng)];
        Rational c(num(rng), den(rng));
        for (int e : t.edges) sigma[e] += c;
    }
    return sigma;
}

std::vector<int> random_capacities(std::mt19937& rng, int m, int budget) {
    std::uniform_int_distribution<int> d(1, 3);
    for (;;) {
        std::vector<int> cap(m);
        int total = 0;
        for (auto& c : cap) total += (c = d(rng));
        if (total <= budget) return cap;
    }
}

Rational l1_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += abs(a[i] - b[i]);
    return d;
}

Rational s_of(const Multigraph& g, const std::vector<Rational>& sigma) {
    return strength(g.with_sigma(sigma)).value;
}

// ---- criteria -----------------------------------------------------------------

std::string figure_one_values(Check& c) {
    const auto start = Clock::now();
    const auto fig = fixture("fig1");
    c.expect(fig.num_vertices() == 36 && fig.num_edges() == 84, "fig1 size");
    const auto classes = figure_one_classes();
    c.expect(classes.clique.size() == 45 && classes.ring.size() == 36 && classes.connector.size() == 3,
             "edge classes");

    SolverSettings exact;
    exact.engine = Engine::Exact;
    const auto eta = exact_eta_star(fig, Engine::Exact, exact);
    auto class_value = [&](const std::vector<int>& ids, const Rational& want, const char* label) {
        for (int id : ids) c.expect(eta[fig.local_edge(id)] == want, std::string(label) + " edge " + std::to_string(id));
    };
    class_value(classes.clique, Rational(1, 3), "clique");
    class_value(classes.ring, Rational(1, 2), "ring/spoke");
    class_value(classes.connector, Rational(2, 3), "connector");

    SolverSettings numeric;
    numeric.engine = Engine::Numeric;
    const auto sol = mod2_solve(fig, numeric);
    double worst = 0;
    for (int e = 0; e < fig.num_edges(); ++e) worst = std::max(worst, std::abs(sol.eta_star[e] - to_double(eta[e])));
    c.expect(worst <= 1e-6, "numeric deviation " + std::to_string(worst));

    const double elapsed = seconds_since(start);
    c.expect(elapsed < 10, "runtime " + std::to_string(elapsed) + " s");
    std::ostringstream os;
    os << "max numeric deviation " << worst << ", " << elapsed << " s";
    return os.str();
}

std::string figure_one_aggregates(Check& c) {
    const auto fig = fixture("fig1");
    const auto s = strength(fig).value;
    const auto dens = max_denseness(fig);
    const auto eta = exact_eta_star(fig);
    const auto meo = weighted_energy(fig, eta);
    const auto mod2 = mod2_solve(fig);
    c.expect(s == Rational(3, 2), "S = " + str(s));
    c.expect(dens.theta == Rational(84, 35), "theta = " + str(dens.theta));
    c.expect(dens.dmax == 3, "D = " + str(dens.dmax));
    c.expect(denseness(induced_subgraph(fig, dens.witness)) == 3, "D witness");
    c.expect(meo == Rational(46, 3), "MEO = " + str(meo));
    c.expect(mod2.exact_value && *mod2.exact_value == Rational(3, 46), "Mod2");

    using Kind = DecompositionNode::Kind;
    const auto pmax = deflate(fig, DeflationStrategy::PMax, eta);
    c.expect(pmax.kind == Kind::ShrunkGraph && pmax.piece.num_vertices() == 3 && pmax.piece.num_edges() == 3 &&
                 pmax.level == Rational(2, 3),
             "pmax root is the shrunk C3 at 2/3");
    int wheels = 0, cliques = 0;
    for (const auto& block : pmax.children) {
        if (block.kind == Kind::ShrunkGraph && block.piece.num_vertices() == 7 && block.piece.num_edges() == 12 &&
            block.level == Rational(1, 2)) {
            ++wheels;
        }
        for (const auto& leaf : block.children) {
            if (leaf.terminal && leaf.piece.num_vertices() == 6 && leaf.piece.num_edges() == 15 &&
                leaf.level == Rational(1, 3)) {
                ++cliques;
            }
        }
    }
    c.expect(pmax.children.size() == 3 && wheels == 3, "pmax has three W7 shrunk nodes at 1/2");
    c.expect(cliques == 3, "pmax has three K6 leaves at 1/3");
    c.expect(total_meo(pmax) == meo, "pmax MEO sum");

    const auto pmin = deflate(fig, DeflationStrategy::PMin, eta);
    // H_min components come first: the three K6 and the 18 ring vertices.
    int first_cliques = 0, others = 0;
    for (std::size_t i = 0; i + 1 < pmin.children.size(); ++i) {
        const auto& leaf = pmin.children[i];
        if (leaf.kind != Kind::BlockSubgraph || !leaf.terminal) {
            ++others;
        } else if (leaf.piece.num_edges() > 0) {
            const bool k6 = leaf.piece.num_vertices() == 6 && leaf.piece.num_edges() == 15 &&
                            leaf.level == Rational(1, 3);
            k6 ? ++first_cliques : ++others;
        }
    }
    c.expect(first_cliques == 3 && others == 0, "pmin removes the three K6 first");
    c.expect(!pmin.children.empty() && pmin.children.back().kind == Kind::ShrunkGraph &&
                 pmin.children.back().piece.num_vertices() == 21 && pmin.children.back().piece.num_edges() == 39,
             "pmin continues on the graph with the K6 shrunk");
    c.expect(total_meo(pmin) == meo, "pmin MEO sum");
    c.expect(leaf_signature(pmin) == leaf_signature(pmax), "pmin and pmax leaves");
    return "S = " + str(s) + ", D = " + str(dens.dmax) + ", theta = " + str(dens.theta) + ", MEO = " + str(meo);
}

std::string duality(Check& c) {
    std::mt19937 rng(2024);
    std::vector<NamedGraph> graphs = corpus();
    const std::size_t fixed = graphs.size();
    std::uniform_int_distribution<int> size(2, 12);
    for (int i = 0; i < 200; ++i) {
        const int n = size(rng);
        std::uniform_int_distribution<int> extra(0, 2 * n);
        auto g = testing::random_connected(rng, n, extra(rng));
        if (i % 2) g = g.with_sigma(testing::random_sigma(rng, g.num_edges()));
        graphs.push_back({"random" + std::to_string(i), std::move(g)});
    }
    SolverSettings numeric;
    numeric.engine = Engine::Numeric;
    double worst = 0;
    for (const auto& [name, g] : graphs) {
        const auto eta = exact_eta_star(g);
        Rational total = 0;
        for (const auto& x : eta) total += x;
        c.expect(total == g.num_vertices() - 1, name + ": sum eta* = " + str(total));
        const double product = mod2_solve(g, numeric).value * to_double(weighted_energy(g, eta));
        worst = std::max(worst, std::abs(product - 1));
        c.expect(std::abs(product - 1) <= 1e-8, name + ": Mod2 * MEO = " + std::to_string(product));
    }
    std::ostringstream os;
    os << fixed << " corpus + 200 random graphs, max |Mod2*MEO - 1| = " << worst;
    return os.str();
}

std::string strength_is_mod1(Check& c) {
    std::mt19937 rng(7);
    int compared = 0;
    for (const auto& [name, g] : corpus_upto(8)) {
        std::vector<Multigraph> variants{g.with_sigma(std::vector<Rational>(g.num_edges(), 1))};
        for (int i = 0; i < 20; ++i) variants.push_back(g.with_sigma(testing::random_sigma(rng, g.num_edges())));
        for (const auto& h : variants) {
            const auto brute = strength(h, StrengthMethod::BruteForce).value;
            const auto lp = mod1_solve(h);
            c.expect(lp.exact_value && *lp.exact_value == brute, name + ": brute " + str(brute));
            ++compared;
        }
    }
    return std::to_string(compared) + " weightings compared";
}

std::string packing(Check& c) {
    std::mt19937 rng(11);
    int unit = 0, weighted = 0;
    for (const auto& [name, g] : corpus_upto(8)) {
        if (!g.unit_weights() || g.num_edges() > 24) continue;
        const auto s = strength(g).value;
        const auto packed = max_disjoint_tree_packing(g).count;
        c.expect(packed == floor_rational(s), name + ": packed " + std::to_string(packed) + ", S = " + str(s));
        ++unit;
        if (g.num_edges() > 12) continue;
        for (int i = 0; i < 5; ++i) {
            const auto cap = random_capacities(rng, g.num_edges(), 24);
            std::vector<Rational> sigma(cap.begin(), cap.end());
            const auto sw = s_of(g, sigma);
            const auto pw = max_disjoint_tree_packing(g, cap).count;
            c.expect(pw == floor_rational(sw), name + ": weighted packed " + std::to_string(pw) + ", S = " + str(sw));
            ++weighted;
        }
    }
    return std::to_string(unit) + " unit graphs, " + std::to_string(weighted) + " integer weightings";
}

std::string blocker(Check& c) {
    int verified = 0;
    for (const auto& [name, g] : corpus_upto(7)) {
        if (g.num_edges() > 12) continue;
        const auto report = verify_blocker_small(g);
        std::string detail = name;
        for (const auto& m : report.messages) detail += ": " + m;
        c.expect(report.ok, detail);
        ++verified;
    }
    const auto c3 = fixture("c3");
    std::set<ExactDensity> got;
    for (const auto& el : enumerate_blocker(c3)) got.insert(el.usage(3));
    const Rational h(1, 2);
    const std::set<ExactDensity> want{{h, h, h}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    c.expect(got == want, "C3 blocker has " + std::to_string(got.size()) + " elements");

    const auto bow = fixture("bowtie");
    const auto trivial = Partition::singletons(bow.num_vertices());
    bool excluded = true;
    for (const auto& el : enumerate_blocker(bow)) excluded = excluded && !(el.partition == trivial);
    c.expect(excluded, "bow-tie blocker contains the all-singletons partition");
    c.expect(!is_extreme_point(bow, ExactDensity(bow.num_edges(), Rational(1, 4))),
             "bow-tie singleton vector is extreme");
    return std::to_string(verified) + " graphs cross-checked, C3 = 4 vectors";
}

std::string beurling_equivalence(Check& c) {
    int partitions = 0, beurling = 0;
    for (const auto& [name, g] : corpus_upto(6)) {
        const auto eta = exact_eta_star(g);
        const auto fair = fair_trees_small(g);
        for (const auto& p : enumerate_feasible_partitions(g)) {
            if (p.num_blocks() < 2) continue;
            const bool a = is_beurling(g, p, eta);
            const bool b = beurling_fairtree_oracle(g, p, fair);
            const bool r = restriction_property_oracle(g, p, fair);
            c.expect(a == b && b == r, name + ": " + format_partition(g, p));
            ++partitions;
            beurling += a;
        }
    }
    return std::to_string(partitions) + " partitions, " + std::to_string(beurling) + " Beurling";
}

std::string serial_rule(Check& c) {
    int checked = 0;
    for (const auto& [name, g] : corpus_upto(6)) {
        const auto eta = exact_eta_star(g);
        const auto meo = weighted_energy(g, eta);
        for (const auto& p : enumerate_feasible_partitions(g)) {
            if (p.num_blocks() < 2 || !is_beurling(g, p, eta)) continue;
            const std::string where = name + ": " + format_partition(g, p);
            const auto gamma = gamma_P_oracle(g, p);
            c.expect(gamma.count_ok && BigInt(gamma.trees.size()) == gamma.product_count, where + " count");
            c.expect(gamma.shrunk_restriction_ok && gamma.block_restrictions_ok, where + " restrictions");

            const auto pieces = serial_pieces(g, p);
            Rational sum = 0;
            std::vector<ExactTreePmf> block_pmfs;
            for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
                sum += exact_meo(pieces[i]);
                block_pmfs.push_back(optimal_pmf(pieces[i]));
            }
            sum += exact_meo(pieces.back());
            c.expect(sum == meo, where + " MEO additivity " + str(sum) + " vs " + str(meo));
            const auto pmf = serial_pmf(g, p, eta, block_pmfs, optimal_pmf(pieces.back()));
            c.expect(expected_overlap(g, pmf) == sum, where + " serial pmf MEO");
            ++checked;
        }
    }
    return std::to_string(checked) + " Beurling partitions";
}

std::string homogeneity(Check& c) {
    int unweighted = 0, weighted = 0, homogeneous = 0, chains = 0;
    auto chain = [&](const std::string& name, const Multigraph& g) {
        const auto levels = scaled_usage(g, exact_eta_star(g));
        const auto s = strength(g).value;
        const auto dens = max_denseness(g, g.num_vertices() <= 12 ? DensenessMethod::BruteForce
                                                                    : DensenessMethod::EtaMin);
        c.expect(1 / max_of(levels) == s, name + ": 1/max level != S");
        c.expect(s <= dens.theta && dens.theta <= dens.dmax, name + ": S <= theta <= D");
        c.expect(dens.dmax == 1 / min_of(levels), name + ": D != 1/min level");
        c.expect(denseness(induced_subgraph(g, dens.witness)) == dens.dmax, name + ": D witness");
        ++chains;
    };

    for (const auto& [name, g] : corpus_upto(8)) {
        if (!g.unit_weights()) continue;
        const auto s = strength(g, StrengthMethod::BruteForce).value;
        const auto dens = max_denseness(g, DensenessMethod::BruteForce);
        const auto eta = exact_eta_star(g);
        const bool constant = min_of(eta) == max_of(eta);
        const bool a = s == dens.theta, b = dens.theta == dens.dmax, d = s == dens.dmax;
        c.expect(a == b && b == d && d == constant, name + ": unweighted predicates disagree");
        c.expect(is_homogeneous(g).homogeneous == constant, name + ": is_homogeneous");
        ++unweighted;
    }

    std::mt19937 rng(13);
    for (const auto& [name, g] : corpus_upto(6)) {
        for (int i = 0; i < 20; ++i) {
            const auto h = g.with_sigma(i % 2 ? conic_sigma(rng, g) : testing::random_sigma(rng, g.num_edges()));
            const auto res = is_homogeneous(h, {}, true);
            const auto levels = scaled_usage(h, exact_eta_star(h));
            const bool constant = min_of(levels) == max_of(levels);
            c.expect(res.by_conic.has_value() && *res.by_conic == constant, name + ": conic vs constant usage");
            c.expect(res.homogeneous == constant, name + ": is_homogeneous weighted");
            if (i < 4) chain(name + " weighted", h);
            ++weighted;
            homogeneous += constant;
        }
    }
    for (const auto& name : fixture_names()) chain(name, fixture(name));
    return std::to_string(unweighted) + " unweighted graphs, " + std::to_string(weighted) + " weightings (" +
           std::to_string(homogeneous) + " homogeneous), " + std::to_string(chains) + " chains";
}

std::string regularity(Check& c) {
    std::mt19937 rng(17);
    int pairs = 0;
    std::uniform_int_distribution<int> cnum(1, 7), cden(1, 3);
    for (const auto& name : fixture_names()) {
        const auto g = fixture(name);
        const int m = g.num_edges();
        for (int i = 0; i < 100; ++i) {
            const auto s1 = testing::random_sigma(rng, m);
            const auto s2 = testing::random_sigma(rng, m);
            std::vector<Rational> lo(m);
            for (int e = 0; e < m; ++e) lo[e] = std::min(s1[e], s2[e]);
            const Rational k(cnum(rng), cden(rng));
            std::vector<Rational> scaled(s1);
            for (auto& x : scaled) x *= k;

            const auto a = s_of(g, s1), b = s_of(g, s2), l = s_of(g, lo), sc = s_of(g, scaled);
            c.expect(abs(a - b) <= l1_distance(s1, s2), name + ": Lipschitz");
            c.expect(l <= a && l <= b, name + ": monotone");
            c.expect(sc == k * a, name + ": 1-homogeneous");
            ++pairs;
        }
    }
    return std::to_string(pairs) + " pairs";
}

std::string determinism(Check& c) {
    std::vector<NamedGraph> graphs;
    for (const auto& name : fixture_names()) graphs.push_back({name, fixture(name)});
    graphs.push_back({"path3 weighted", fixture("path3").with_sigma({1, 2})});
    for (const auto& [name, g] : graphs) {
        for (auto strategy : {DeflationStrategy::PMax, DeflationStrategy::PMin}) {
            ReportOptions opts;
            opts.strategy = strategy;
            opts.include_blocker = g.num_vertices() <= 7;
            const auto r1 = analyze(g, opts);
            const auto r2 = analyze(g, opts);
            c.expect(report_json(g, r1) == report_json(g, r2), name + ": JSON differs");
            c.expect(export_dot(g, r1.eta_star) == export_dot(g, r2.eta_star), name + ": DOT differs");
            c.expect(decomposition_dot(r1.decomposition) == decomposition_dot(r2.decomposition),
                     name + ": decomposition DOT differs");
        }
    }

    std::mt19937 rng(23);
    std::vector<NamedGraph> solve_set = corpus();
    for (int i = 0; i < 50; ++i) {
        auto g = testing::random_connected(rng, 3 + i % 10, i % 12);
        if (i % 2) g = g.with_sigma(testing::random_sigma(rng, g.num_edges()));
        solve_set.push_back({"random" + std::to_string(i), std::move(g)});
    }
    double worst = 0;
    int solutions = 0;
    for (const auto& [name, g] : solve_set) {
        for (auto engine : {Engine::Numeric, Engine::Hybrid, Engine::Exact}) {
            SolverSettings st;
            st.engine = engine;
            const auto sol = mod2_solve(g, st);
            worst = std::max(worst, sol.kkt_residual);
            c.expect(sol.kkt_residual <= 1e-9,
                     name + " " + to_string(engine) + ": KKT " + std::to_string(sol.kkt_residual));
            ++solutions;
        }
        const auto sol1 = mod1_solve(g);
        worst = std::max(worst, sol1.kkt_residual);
        c.expect(sol1.kkt_residual <= 1e-9, name + " mod1: KKT " + std::to_string(sol1.kkt_residual));
        ++solutions;
    }
    std::ostringstream os;
    os << graphs.size() << " graphs byte-stable, " << solutions << " solutions, max KKT " << worst;
    return os.str();
}

struct Criterion {
    int number;
    const char* title;
    std::function<std::string(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "fig1 reproduction", figure_one_values},
        {2, "fig1 aggregates and decompositions", figure_one_aggregates},
        {3, "duality identity", duality},
        {4, "strength equals 1-modulus", strength_is_mod1},
        {5, "tree packing", packing},
        {6, "blocker characterization", blocker},
        {7, "Beurling equivalence", beurling_equivalence},
        {8, "serial rule", serial_rule},
        {9, "homogeneity equivalences", homogeneity},
        {10, "strength regularity", regularity},
        {11, "determinism", determinism},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        std::string detail;
        const auto start = Clock::now();
        try {
            detail = cr.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = check.ok();
        failures += !ok;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds_since(start);
        std::cout << (ok ? "PASS" : "FAIL") << " [PRIMARY] " << cr.number << ". " << cr.title << ": "
                  << (ok ? detail + ", " : "") << check.summary() << " (" << time.str() << " s)" << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
