#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treemod/graph.hpp"
#include "treemod/partition_ops.hpp"
#include "treemod/tree_ops.hpp"

namespace treemod {

enum class Engine { Numeric, Exact, Hybrid };

const char* to_string(Engine engine);

struct SolverSettings {
    double tol = 1e-9;
    /// Outer constraint-generation iterations; 0 means 50 * |E|.
    std::size_t max_iters = 0;
    Engine engine = Engine::Hybrid;
    std::size_t tree_cap = kDefaultTreeCap;
};

/// Probability mass function over spanning trees (parallel arrays).
template <class T>
struct BasicTreePmf {
    std::vector<SpanningTree> trees;
    std::vector<T> weights;

    std::size_t size() const { return trees.size(); }
};

using TreePmf = BasicTreePmf<double>;
using ExactTreePmf = BasicTreePmf<Rational>;

/// Edge marginal N^T mu.
template <class T>
std::vector<T> edge_marginal(const BasicTreePmf<T>& pmf, int num_edges) {
    std::vector<T> eta(num_edges, T(0));
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        for (int e : pmf.trees[i].edges) eta[e] += pmf.weights[i];
    }
    return eta;
}

struct ModulusSolution {
    int p = 2;
    std::vector<Rational> sigma;
    double value = 0;
    Density rho_star;
    Density eta_star;
    TreePmf mu;  // p = 2: normalized dual multipliers; p = 1: normalized packing
    std::vector<SpanningTree> active_trees;
    Engine engine = Engine::Numeric;
    double kkt_residual = 0;
    std::size_t iterations = 0;
    /// Filled by the exact and hybrid engines.
    std::optional<Rational> exact_value;
    std::optional<ExactDensity> exact_rho_star;
    std::optional<ExactDensity> exact_eta_star;
};

/// Exact linear program min w^T rho over Adm(Gamma) by column generation on
/// its tree-packing dual, with the MST as separation oracle. Weights may be
/// zero. The returned rho is a vertex of Adm(Gamma).
struct Mod1Exact {
    Rational value;
    ExactDensity rho;
    std::vector<SpanningTree> trees;
    std::vector<Rational> packing;  // lambda per generated tree
    std::size_t iterations = 0;
    std::size_t pivots = 0;
};

Mod1Exact mod1_exact(const Multigraph& g, const ExactDensity& weights);

/// 2-modulus by constraint generation: the inner QP over the active trees is
/// solved in the dual by coordinate ascent, the separation step is an MST.
ModulusSolution mod2_solve(const Multigraph& g, const SolverSettings& settings = {});

/// 1-modulus by exact LP column generation; value equals the strength.
ModulusSolution mod1_solve(const Multigraph& g, const SolverSettings& settings = {});

/// Optimal expected edge usage, exact. Exact engine: deflation through the
/// finest critical partition. Hybrid: numeric solve, rational snapping and
/// an exact optimality certificate, falling back to deflation.
ExactDensity exact_eta_star(const Multigraph& g, Engine engine = Engine::Exact,
                            const SolverSettings& settings = {});

/// Deflation only; `route` selects how each finest critical partition is found.
ExactDensity eta_star_by_deflation(const Multigraph& g, CriticalRoute route = CriticalRoute::Auto);

/// Checks that eta is MEO-optimal: in the spanning tree polytope and a
/// minimizer of its own gradient over it. Exact.
bool certify_eta_star(const Multigraph& g, const ExactDensity& eta);

/// Same verdict by peeling the top level of sigma^{-1} eta: the peeled
/// partition must be critical with eta = sigma/S on its cut, recursively on
/// the blocks. Needs only strength LPs with sigma weights.
bool certify_by_levels(const Multigraph& g, const ExactDensity& eta);

/// sum_e eta(e)^2 / sigma(e).
Rational weighted_energy(const Multigraph& g, const ExactDensity& eta);
/// sigma^{-1} eta per edge.
ExactDensity scaled_usage(const Multigraph& g, const ExactDensity& eta);

struct MeoResult {
    Rational value;
    TreePmf mu;
    ExactDensity eta_star;
};

MeoResult meo_solve(const Multigraph& g, const SolverSettings& settings = {});

/// E_mu[ sigma^{-1}(gamma cap gamma') ] for independent gamma, gamma' ~ mu,
/// summed over pairs of trees.
template <class T>
T expected_overlap(const Multigraph& g, const BasicTreePmf<T>& pmf);

struct KktViolation {
    std::string condition;  // "admissibility", "marginal", "proportionality", "slackness", "pmf"
    std::string detail;
    double magnitude;
};

struct KktReport {
    bool ok = true;
    std::vector<KktViolation> violations;
};

/// Diagnostic check of the three optimality conditions at tolerance tol.
KktReport verify_kkt(const Multigraph& g, const Density& rho, const Density& eta, const TreePmf& mu,
                     double tol);

struct HomogeneityResult {
    bool homogeneous;
    bool by_strength;                    // S_sigma = theta_sigma
    std::optional<bool> by_conic;        // sigma in coni(Gamma), oracle scale only
    bool by_dominant;                    // n_sigma in Dom(Gamma)
    bool by_constant_usage;              // sigma^{-1} eta* constant
    /// Homogeneous: a conic combination sigma = sum_i c_i 1_{gamma_i} when the conic route ran.
    std::vector<SpanningTree> conic_trees;
    std::vector<Rational> conic_coefficients;
    /// Not homogeneous: a critical partition with weight S < theta.
    std::optional<Partition> separating;
};

HomogeneityResult is_homogeneous(const Multigraph& g, const SolverSettings& settings = {},
                                 bool require_conic = false);

/// n_sigma(e) = sigma(e)/sigma(E) * (|V|-1).
ExactDensity n_sigma(const Multigraph& g);

/// Conic decomposition of sigma over enumerated trees, if one exists.
std::optional<ExactTreePmf> conic_decomposition(const Multigraph& g, std::size_t tree_cap);

/// An exact MEO-optimal pmf (oracle scale), found by LP over enumerated trees.
ExactTreePmf exact_optimal_pmf(const Multigraph& g, std::size_t tree_cap = kDefaultTreeCap);

/// Trees carrying positive mass under some MEO-optimal pmf (oracle scale).
std::vector<SpanningTree> fair_trees_small(const Multigraph& g, std::size_t tree_cap = kDefaultTreeCap);

}  // namespace treemod
