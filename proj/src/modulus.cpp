#include "treemod/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "treemod/blocker.hpp"
#include "treemod/simplex.hpp"

namespace treemod {

const char* to_string(Engine engine) {
    switch (engine) {
        case Engine::Numeric: return "numeric";
        case Engine::Exact: return "exact";
        case Engine::Hybrid: return "hybrid";
    }
    return "unknown";
}

// ---- 1-modulus ---------------------------------------------------------------------------

Mod1Exact mod1_exact(const Multigraph& g, const ExactDensity& weights) {
    require_connected(g);
    const int m = g.num_edges();
    if (static_cast<int>(weights.size()) != m) {
        throw Error(ErrorKind::InvalidArgument, "weight vector has wrong length");
    }
    // Packing dual: max sum(lambda) s.t. sum_{gamma ∋ e} lambda_gamma <= w(e).
    ExactSimplex lp(weights);
    std::vector<int> slacks(m);
    for (int e = 0; e < m; ++e) slacks[e] = lp.add_column({{e, Rational(1)}}, 0);
    lp.set_identity_basis(slacks);

    Mod1Exact out;
    std::vector<int> tree_column;
    const std::size_t cap = 100 * static_cast<std::size_t>(m) + 100;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap) throw Error(ErrorKind::LpNotConverged, "column generation cap reached");
        if (lp.maximize() != LpStatus::Optimal) {
            throw Error(ErrorKind::LpNotConverged, "packing LP did not reach optimality");
        }
        auto rho = lp.duals();
        auto mst = minimum_spanning_tree(g, rho);
        if (mst.length >= 1) {
            out.value = lp.objective();
            out.rho = std::move(rho);
            out.iterations = iter;
            out.pivots = lp.pivots();
            break;
        }
        if (std::find(out.trees.begin(), out.trees.end(), mst.tree) != out.trees.end()) {
            throw Error(ErrorKind::LpNotConverged, "separation returned an active tree");
        }
        SparseColumn col;
        for (int e : mst.tree.edges) col.emplace_back(e, Rational(1));
        tree_column.push_back(lp.add_column(std::move(col), 1));
        out.trees.push_back(mst.tree);
    }
    for (int c : tree_column) out.packing.push_back(lp.value(c));
    return out;
}

ModulusSolution mod1_solve(const Multigraph& g, const SolverSettings& settings) {
    auto lp = mod1_exact(g, g.sigma());
    ModulusSolution sol;
    sol.p = 1;
    sol.sigma = g.sigma();
    sol.engine = Engine::Exact;
    sol.value = to_double(lp.value);
    sol.exact_value = lp.value;
    sol.exact_rho_star = lp.rho;
    sol.iterations = lp.iterations;
    sol.rho_star.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) sol.rho_star[e] = to_double(lp.rho[e]);
    sol.active_trees = lp.trees;
    Rational total = 0;
    for (const auto& l : lp.packing) total += l;
    for (std::size_t i = 0; i < lp.trees.size(); ++i) {
        if (lp.packing[i] > 0) {
            sol.mu.trees.push_back(lp.trees[i]);
            sol.mu.weights.push_back(to_double(lp.packing[i] / total));
        }
    }
    sol.eta_star = edge_marginal(sol.mu, g.num_edges());
    (void)settings;
    return sol;
}

// ---- 2-modulus, numeric ------------------------------------------------------------------

namespace {

ModulusSolution mod2_tree_graph(const Multigraph& g) {
    // A tree has the single constraint sum(rho) >= 1: rho proportional to 1/sigma.
    const int m = g.num_edges();
    Rational inv_sum = 0;
    for (int e = 0; e < m; ++e) inv_sum += 1 / g.sigma(e);
    ModulusSolution sol;
    sol.p = 2;
    sol.sigma = g.sigma();
    sol.engine = Engine::Numeric;
    SpanningTree only;
    for (int e = 0; e < m; ++e) only.edges.push_back(e);
    sol.rho_star.resize(m);
    sol.eta_star.assign(m, 1.0);
    for (int e = 0; e < m; ++e) sol.rho_star[e] = to_double(1 / g.sigma(e) / inv_sum);
    sol.value = to_double(1 / inv_sum);
    sol.mu.trees.push_back(only);
    sol.mu.weights.push_back(1.0);
    sol.active_trees.push_back(only);
    sol.kkt_residual = 0;
    return sol;
}

struct DualState {
    std::vector<EdgeSet> trees;
    std::vector<double> lambda;
    std::vector<double> curvature;  // sum over the tree of 1/(2 sigma)
    std::vector<double> load;       // sum of lambda over trees containing e
};

double tree_len(const EdgeSet& tree, const std::vector<double>& rho) {
    double s = 0;
    for (int e : tree) s += rho[e];
    return s;
}

}  // namespace

namespace {

ModulusSolution mod2_numeric(const Multigraph& g, const SolverSettings& settings) {
    require_connected(g);
    const int m = g.num_edges();
    const int n = g.num_vertices();
    if (m == n - 1) return mod2_tree_graph(g);

    const auto sigma = g.sigma_double();
    std::vector<double> half_inv(m);
    for (int e = 0; e < m; ++e) half_inv[e] = 0.5 / sigma[e];

    const double tol = settings.tol;
    const std::size_t max_outer = settings.max_iters ? settings.max_iters : 50 * static_cast<std::size_t>(m);
    const std::size_t max_sweeps = 200000;

    DualState st;
    st.load.assign(m, 0.0);
    std::vector<double> rho(m, 0.0);
    auto refresh_rho = [&] {
        for (int e = 0; e < m; ++e) rho[e] = st.load[e] * half_inv[e];
    };

    // Restricted KKT residual over the active trees.
    auto inner_residual = [&] {
        double r = 0;
        for (std::size_t t = 0; t < st.trees.size(); ++t) {
            double slack = 1 - tree_len(st.trees[t], rho);
            r = std::max(r, st.lambda[t] > 0 ? std::abs(slack) : std::max(0.0, slack));
        }
        return r;
    };

    auto sweep = [&] {
        for (std::size_t t = 0; t < st.trees.size(); ++t) {
            const auto& tree = st.trees[t];
            double len = tree_len(tree, rho);
            double updated = std::max(0.0, st.lambda[t] + (1 - len) / st.curvature[t]);
            double diff = updated - st.lambda[t];
            if (diff == 0) continue;
            st.lambda[t] = updated;
            for (int e : tree) {
                st.load[e] += diff;
                rho[e] = st.load[e] * half_inv[e];
            }
        }
    };

    std::size_t outer = 0;
    bool converged = false;
    for (; outer < max_outer; ++outer) {
        for (std::size_t s = 0; s < max_sweeps; ++s) {
            sweep();
            if (s % 8 == 7 && inner_residual() <= tol * 0.05) break;
        }
        refresh_rho();
        auto mst = minimum_spanning_tree(g, rho);
        if (mst.length >= 1 - tol * 0.05) {
            converged = true;
            break;
        }
        auto found = std::find(st.trees.begin(), st.trees.end(), mst.tree.edges);
        if (found != st.trees.end()) {
            // Already active; the inner solve has not caught up yet.
            continue;
        }
        st.trees.push_back(mst.tree.edges);
        st.lambda.push_back(0.0);
        double curv = 0;
        for (int e : mst.tree.edges) curv += half_inv[e];
        st.curvature.push_back(curv);
    }
    if (!converged) {
        throw Error(ErrorKind::NotConverged, "mod2 constraint generation hit " +
                                                 std::to_string(max_outer) + " iterations");
    }

    ModulusSolution sol;
    sol.p = 2;
    sol.sigma = g.sigma();
    sol.engine = Engine::Numeric;
    sol.iterations = outer;
    sol.rho_star = rho;
    double energy = 0;
    for (int e = 0; e < m; ++e) energy += sigma[e] * rho[e] * rho[e];
    sol.value = energy;
    double total = 0;
    for (double l : st.lambda) total += l;
    for (std::size_t t = 0; t < st.trees.size(); ++t) {
        sol.active_trees.push_back({st.trees[t]});
        if (st.lambda[t] > 0) {
            sol.mu.trees.push_back({st.trees[t]});
            sol.mu.weights.push_back(st.lambda[t] / total);
        }
    }
    sol.eta_star.resize(m);
    for (int e = 0; e < m; ++e) sol.eta_star[e] = st.load[e] / total;

    // Residual of the three optimality conditions.
    double residual = std::max(0.0, 1 - minimum_spanning_tree(g, rho).length);
    for (std::size_t i = 0; i < sol.mu.size(); ++i) {
        residual = std::max(residual,
                            sol.mu.weights[i] * std::abs(1 - tree_len(sol.mu.trees[i].edges, rho)));
    }
    // eta = sigma rho / Mod holds exactly iff sum(lambda) = 2 Mod.
    residual = std::max(residual, std::abs(total / 2 - energy) / energy);
    sol.kkt_residual = residual;
    return sol;
}

std::optional<ExactDensity> snap_and_certify(const Multigraph& g, const Density& eta, double tol) {
    ExactDensity snapped(eta.size());
    for (std::size_t e = 0; e < eta.size(); ++e) snapped[e] = snap_to_rational(eta[e], 10 * tol);
    if (!certify_by_levels(g, snapped)) return std::nullopt;
    return snapped;
}

ExactDensity exact_from_numeric(const Multigraph& g, const ModulusSolution& numeric, Engine engine,
                                const SolverSettings& settings) {
    if (engine == Engine::Numeric) {
        ExactDensity snapped(numeric.eta_star.size());
        for (std::size_t e = 0; e < snapped.size(); ++e) {
            snapped[e] = snap_to_rational(numeric.eta_star[e], 10 * settings.tol);
        }
        return snapped;
    }
    if (auto certified = snap_and_certify(g, numeric.eta_star, settings.tol)) return *certified;
    return eta_star_by_deflation(g);
}

void attach_exact(const Multigraph& g, ModulusSolution& sol, ExactDensity eta) {
    const Rational mod = 1 / weighted_energy(g, eta);
    ExactDensity rho(eta.size());
    for (std::size_t e = 0; e < eta.size(); ++e) rho[e] = mod * eta[e] / g.sigma(e);
    sol.exact_value = mod;
    sol.exact_rho_star = std::move(rho);
    sol.exact_eta_star = std::move(eta);
}

}  // namespace

ModulusSolution mod2_solve(const Multigraph& g, const SolverSettings& settings) {
    ModulusSolution sol = mod2_numeric(g, settings);
    if (settings.engine == Engine::Numeric) return sol;
    ExactDensity eta = settings.engine == Engine::Exact
                           ? eta_star_by_deflation(g)
                           : exact_from_numeric(g, sol, Engine::Hybrid, settings);
    attach_exact(g, sol, std::move(eta));
    sol.engine = settings.engine;
    return sol;
}

// ---- exact eta* --------------------------------------------------------------------------

Rational weighted_energy(const Multigraph& g, const ExactDensity& eta) {
    Rational sum = 0;
    for (int e = 0; e < g.num_edges(); ++e) sum += eta[e] * eta[e] / g.sigma(e);
    return sum;
}

ExactDensity scaled_usage(const Multigraph& g, const ExactDensity& eta) {
    ExactDensity out(eta.size());
    for (std::size_t e = 0; e < eta.size(); ++e) out[e] = eta[e] / g.sigma(static_cast<int>(e));
    return out;
}

ExactDensity eta_star_by_deflation(const Multigraph& g, CriticalRoute route) {
    require_connected(g);
    const int m = g.num_edges();
    ExactDensity eta(m, 0);
    const auto top = finest_critical_partition(g, route);
    for (int e : cut_set(g, top.partition)) eta[e] = g.sigma(e) / top.strength;

    std::unordered_map<int, int> local_of_id;
    for (int e = 0; e < m; ++e) local_of_id[g.edge(e).id] = e;
    for (const auto& block : top.partition.blocks()) {
        if (block.size() < 2) continue;
        Multigraph h = induced_subgraph(g, block);
        auto sub = eta_star_by_deflation(h, route);
        for (int e = 0; e < h.num_edges(); ++e) eta[local_of_id.at(h.edge(e).id)] = sub[e];
    }
    return eta;
}

bool certify_eta_star(const Multigraph& g, const ExactDensity& eta) {
    const int m = g.num_edges();
    if (static_cast<int>(eta.size()) != m) return false;
    Rational sum = 0;
    for (const auto& x : eta) {
        if (x < 0) return false;
        sum += x;
    }
    if (sum != g.num_vertices() - 1) return false;
    // Spanning tree polytope: Dom membership plus the sum constraint.
    if (mod1_exact(g, eta).value < 1) return false;
    // Linear optimality of the gradient direction sigma^{-1} eta.
    auto grad = scaled_usage(g, eta);
    Rational inner = 0;
    for (int e = 0; e < m; ++e) inner += grad[e] * eta[e];
    return minimum_spanning_tree(g, grad).length == inner;
}

bool certify_by_levels(const Multigraph& g, const ExactDensity& eta) {
    const int m = g.num_edges();
    if (static_cast<int>(eta.size()) != m || m == 0) return false;
    for (const auto& x : eta) {
        if (x <= 0) return false;
    }
    const auto levels = scaled_usage(g, eta);
    const Rational top = *std::max_element(levels.begin(), levels.end());
    EdgeSet e_top;
    for (int e = 0; e < m; ++e) {
        if (levels[e] == top) e_top.push_back(e);
    }
    const Partition p = components_without(g, e_top);
    if (p.num_blocks() < 2 || cut_set(g, p) != e_top) return false;
    const auto s = strength(g);
    if (partition_weight(g, p) != s.value || top * s.value != 1) return false;
    for (const auto& block : p.blocks()) {
        if (block.size() < 2) continue;
        Multigraph h = induced_subgraph(g, block);
        ExactDensity sub(h.num_edges());
        for (int e = 0; e < h.num_edges(); ++e) sub[e] = eta[g.local_edge(h.edge(e).id)];
        if (!certify_by_levels(h, sub)) return false;
    }
    return true;
}

ExactDensity exact_eta_star(const Multigraph& g, Engine engine, const SolverSettings& settings) {
    require_connected(g);
    if (engine == Engine::Exact) return eta_star_by_deflation(g);
    return exact_from_numeric(g, mod2_numeric(g, settings), engine, settings);
}

// ---- MEO -----------------------------------------------------------------------------

MeoResult meo_solve(const Multigraph& g, const SolverSettings& settings) {
    ModulusSolution numeric = mod2_numeric(g, settings);
    MeoResult out;
    out.eta_star = settings.engine == Engine::Exact
                       ? eta_star_by_deflation(g)
                       : exact_from_numeric(g, numeric, settings.engine, settings);
    out.value = weighted_energy(g, out.eta_star);
    out.mu = std::move(numeric.mu);
    return out;
}

template <class T>
T expected_overlap(const Multigraph& g, const BasicTreePmf<T>& pmf) {
    std::vector<T> inv(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        if constexpr (std::is_same_v<T, double>) {
            inv[e] = 1.0 / to_double(g.sigma(e));
        } else {
            inv[e] = 1 / g.sigma(e);
        }
    }
    T total(0);
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        for (std::size_t j = 0; j < pmf.size(); ++j) {
            T shared(0);
            const auto& a = pmf.trees[i].edges;
            const auto& b = pmf.trees[j].edges;
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] < b[y]) {
                    ++x;
                } else if (b[y] < a[x]) {
                    ++y;
                } else {
                    shared += inv[a[x]];
                    ++x;
                    ++y;
                }
            }
            total += pmf.weights[i] * pmf.weights[j] * shared;
        }
    }
    return total;
}

template double expected_overlap<double>(const Multigraph&, const BasicTreePmf<double>&);
template Rational expected_overlap<Rational>(const Multigraph&, const BasicTreePmf<Rational>&);

// ---- KKT diagnostics ---------------------------------------------------------------------

KktReport verify_kkt(const Multigraph& g, const Density& rho, const Density& eta, const TreePmf& mu,
                     double tol) {
    KktReport report;
    const int m = g.num_edges();
    const auto sigma = g.sigma_double();
    auto flag = [&](const std::string& condition, const std::string& detail, double magnitude) {
        report.ok = false;
        report.violations.push_back({condition, detail, magnitude});
    };

    double mass = 0;
    double most_negative = 0;
    for (double w : mu.weights) {
        mass += w;
        most_negative = std::min(most_negative, w);
    }
    if (std::abs(mass - 1) > tol || most_negative < -tol) {
        flag("pmf", "mu is not a probability mass function", std::max(std::abs(mass - 1), -most_negative));
    }

    // (i) rho admissible and eta = N^T mu.
    double worst_rho = 0;
    int worst_rho_edge = -1;
    for (int e = 0; e < m; ++e) {
        if (rho[e] < worst_rho) {
            worst_rho = rho[e];
            worst_rho_edge = e;
        }
    }
    auto mst = minimum_spanning_tree(g, rho);
    if (mst.length < 1 - tol || worst_rho < -tol) {
        std::ostringstream os;
        os << "shortest tree length " << mst.length;
        if (worst_rho_edge >= 0) os << ", rho(" << worst_rho_edge << ") = " << worst_rho;
        flag("(i) admissibility", os.str(), std::max(1 - mst.length, -worst_rho));
    }
    auto marginal = edge_marginal(mu, m);
    double worst_marginal = 0;
    int worst_marginal_edge = 0;
    for (int e = 0; e < m; ++e) {
        double d = std::abs(marginal[e] - eta[e]);
        if (d > worst_marginal) {
            worst_marginal = d;
            worst_marginal_edge = e;
        }
    }
    if (worst_marginal > tol) {
        flag("(i) marginal", "edge " + std::to_string(worst_marginal_edge), worst_marginal);
    }

    // (ii) eta = sigma rho / Mod.
    double mod = 0;
    for (int e = 0; e < m; ++e) mod += sigma[e] * rho[e] * rho[e];
    double worst_prop = 0;
    int worst_prop_edge = 0;
    for (int e = 0; e < m; ++e) {
        double d = mod > 0 ? std::abs(eta[e] - sigma[e] * rho[e] / mod) : std::abs(eta[e]);
        if (d > worst_prop) {
            worst_prop = d;
            worst_prop_edge = e;
        }
    }
    if (worst_prop > tol) {
        flag("(ii) proportionality", "edge " + std::to_string(worst_prop_edge), worst_prop);
    }

    // (iii) mu(gamma) (1 - l_rho(gamma)) = 0.
    double worst_slack = 0;
    std::size_t worst_tree = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double d = std::abs(mu.weights[i] * (1 - tree_length(mu.trees[i], rho)));
        if (d > worst_slack) {
            worst_slack = d;
            worst_tree = i;
        }
    }
    if (worst_slack > tol) {
        flag("(iii) slackness", "pmf entry " + std::to_string(worst_tree), worst_slack);
    }
    return report;
}

// ---- homogeneity ------------------------------------------------------------------------

ExactDensity n_sigma(const Multigraph& g) {
    const Rational total = g.total_sigma();
    ExactDensity out(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) out[e] = g.sigma(e) / total * (g.num_vertices() - 1);
    return out;
}

namespace {

std::vector<SparseColumn> tree_columns(const std::vector<SpanningTree>& trees) {
    std::vector<SparseColumn> cols;
    cols.reserve(trees.size());
    for (const auto& t : trees) {
        SparseColumn col;
        for (int e : t.edges) col.emplace_back(e, Rational(1));
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

std::optional<ExactTreePmf> conic_decomposition(const Multigraph& g, std::size_t tree_cap) {
    const auto trees = enumerate_spanning_trees(g, tree_cap);
    const auto cols = tree_columns(trees);
    auto res = solve_lp(g.num_edges(), cols, g.sigma(), std::vector<Rational>(cols.size(), 0));
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    if (res.status != LpStatus::Optimal) throw Error(ErrorKind::LpNotConverged, "conic LP");
    ExactTreePmf out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (res.x[i] > 0) {
            out.trees.push_back(trees[i]);
            out.weights.push_back(res.x[i]);
        }
    }
    return out;
}

HomogeneityResult is_homogeneous(const Multigraph& g, const SolverSettings& settings,
                                 bool require_conic) {
    require_connected(g);
    HomogeneityResult out{};
    const auto sr = strength(g, g.num_vertices() <= 8 ? StrengthMethod::BruteForce : StrengthMethod::Mod1Lp);
    const Rational theta = denseness(g);
    out.by_strength = sr.value == theta;

    const auto eta = exact_eta_star(g, settings.engine, settings);
    const auto scaled = scaled_usage(g, eta);
    out.by_constant_usage =
        std::all_of(scaled.begin(), scaled.end(), [&](const Rational& x) { return x == scaled.front(); });

    out.by_dominant = dominant_membership(g, n_sigma(g)).member;

    bool conic_possible = true;
    try {
        conic_possible = count_spanning_trees(g) <= BigInt(settings.tree_cap);
    } catch (const Error&) {
        conic_possible = false;
    }
    if (conic_possible) {
        auto cone = conic_decomposition(g, settings.tree_cap);
        out.by_conic = cone.has_value();
        if (cone) {
            out.conic_trees = cone->trees;
            out.conic_coefficients = cone->weights;
        }
    } else if (require_conic) {
        throw Error(ErrorKind::TooManyTreesForConicLP, "tree count exceeds cap");
    }

    out.homogeneous = out.by_strength;
    bool agree = out.by_constant_usage == out.homogeneous && out.by_dominant == out.homogeneous &&
                 (!out.by_conic || *out.by_conic == out.homogeneous);
    if (!agree) {
        throw Error(ErrorKind::InternalConsistency, "homogeneity routes disagree");
    }
    if (!out.homogeneous) out.separating = sr.critical;
    return out;
}

// ---- optimal pmfs and fair trees -----------------------------------------------------------

namespace {

struct PmfLp {
    std::vector<SpanningTree> candidates;
    std::vector<SparseColumn> columns;
    std::vector<Rational> rhs;
};

// Candidates are the trees that are tight for rho*; the LP asks for a pmf on
// them with marginal eta*.
PmfLp pmf_lp(const Multigraph& g, std::size_t tree_cap) {
    const int m = g.num_edges();
    const auto eta = eta_star_by_deflation(g);
    const Rational meo = weighted_energy(g, eta);
    ExactDensity rho(m);
    for (int e = 0; e < m; ++e) rho[e] = eta[e] / (g.sigma(e) * meo);
    PmfLp lp;
    for (auto& t : enumerate_spanning_trees(g, tree_cap)) {
        if (tree_length(t, rho) == 1) lp.candidates.push_back(std::move(t));
    }
    lp.columns = tree_columns(lp.candidates);
    for (auto& col : lp.columns) col.emplace_back(m, Rational(1));
    lp.rhs = eta;
    lp.rhs.push_back(1);
    return lp;
}

}  // namespace

ExactTreePmf exact_optimal_pmf(const Multigraph& g, std::size_t tree_cap) {
    require_connected(g);
    auto lp = pmf_lp(g, tree_cap);
    auto res = solve_lp(g.num_edges() + 1, lp.columns, lp.rhs,
                        std::vector<Rational>(lp.columns.size(), 0));
    if (res.status != LpStatus::Optimal) {
        throw Error(ErrorKind::InternalConsistency, "no pmf realizes eta* on the tight trees");
    }
    ExactTreePmf out;
    for (std::size_t i = 0; i < lp.candidates.size(); ++i) {
        if (res.x[i] > 0) {
            out.trees.push_back(lp.candidates[i]);
            out.weights.push_back(res.x[i]);
        }
    }
    return out;
}

std::vector<SpanningTree> fair_trees_small(const Multigraph& g, std::size_t tree_cap) {
    require_connected(g);
    auto lp = pmf_lp(g, tree_cap);
    const std::size_t k = lp.candidates.size();
    std::vector<char> status(k, 0);  // 0 unknown, 1 fair, 2 not fair
    for (std::size_t i = 0; i < k; ++i) {
        if (status[i]) continue;
        std::vector<Rational> cost(k, 0);
        cost[i] = 1;
        auto res = solve_lp(g.num_edges() + 1, lp.columns, lp.rhs, cost);
        if (res.status != LpStatus::Optimal) {
            throw Error(ErrorKind::InternalConsistency, "fair-tree LP failed");
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (res.x[j] > 0) status[j] = 1;
        }
        if (!status[i]) status[i] = 2;
    }
    std::vector<SpanningTree> fair;
    for (std::size_t i = 0; i < k; ++i) {
        if (status[i] == 1) fair.push_back(lp.candidates[i]);
    }
    return fair;
}

}  // namespace treemod
