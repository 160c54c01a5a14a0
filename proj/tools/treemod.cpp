// treemod: spanning-tree modulus, strength and deflation from the command line.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "treemod/beurling.hpp"
#include "treemod/blocker.hpp"
#include "treemod/fixtures.hpp"
#include "treemod/modulus.hpp"
#include "treemod/report.hpp"

namespace {

using namespace treemod;

enum ExitCode { kOk = 0, kInputError = 1, kNotConverged = 2, kInternalError = 3 };

struct Options {
    std::string graph;
    std::string sigma = "file-column";
    std::string engine = "hybrid";
    double tol = 1e-9;
    std::string strategy = "pmax";
    std::string json;
    std::string dot;
    int max_enum = kDefaultPartitionVertexCap;
    std::string method = "lp";
};

std::string pretty(const Rational& x) {
    std::string s = format_rational(x);
    return s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0 ? s.substr(0, s.size() - 2) : s;
}

std::string decimal(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

Engine parse_engine(const std::string& s) {
    if (s == "exact") return Engine::Exact;
    if (s == "numeric") return Engine::Numeric;
    if (s == "hybrid") return Engine::Hybrid;
    throw Error(ErrorKind::InvalidArgument, "unknown engine '" + s + "'");
}

DeflationStrategy parse_strategy(const std::string& s) {
    if (s == "pmax") return DeflationStrategy::PMax;
    if (s == "pmin") return DeflationStrategy::PMin;
    throw Error(ErrorKind::InvalidArgument, "unknown strategy '" + s + "'");
}

Multigraph load(const Options& o) {
    Multigraph g = load_graph(o.graph);
    if (o.sigma == "uniform") return g.with_sigma(std::vector<Rational>(g.num_edges(), 1));
    if (o.sigma != "file-column") throw Error(ErrorKind::InvalidArgument, "unknown sigma mode '" + o.sigma + "'");
    return g;
}

SolverSettings settings(const Options& o) {
    SolverSettings s;
    s.engine = parse_engine(o.engine);
    s.tol = o.tol;
    return s;
}

ReportOptions report_options(const Options& o, bool blocker) {
    ReportOptions r;
    r.settings = settings(o);
    r.strategy = parse_strategy(o.strategy);
    r.include_blocker = blocker;
    r.max_enum = o.max_enum;
    return r;
}

void write_outputs(const Options& o, const Multigraph& g, const AnalysisReport& r, bool decomposition_dot_file) {
    if (!o.json.empty()) write_file(o.json, report_json(g, r));
    if (!o.dot.empty()) {
        write_file(o.dot, decomposition_dot_file ? decomposition_dot(r.decomposition) : export_dot(g, r.eta_star));
    }
}

std::string block_names(const Multigraph& g, const VertexSet& block) {
    std::string s = "{";
    for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + g.vertex_name(block[i]);
    return s + "}";
}

int run_modulus(const Options& o) {
    const auto g = load(o);
    const auto r = analyze(g, report_options(o, false));
    if (r.engine == Engine::Numeric) {
        std::cout << "Mod2 = " << decimal(to_double(r.mod2)) << ", MEO = " << decimal(to_double(r.meo)) << "\n";
    } else {
        std::cout << "Mod2 = " << pretty(r.mod2) << ", MEO = " << pretty(r.meo) << "\n";
    }
    std::cout << "Mod1 = S = " << pretty(r.strength) << "\n";
    std::cout << "engine " << to_string(r.engine) << ", kkt residual " << decimal(r.kkt_residual) << "\n";
    std::map<Rational, int> levels;
    for (const auto& x : r.eta_star) ++levels[x];
    std::cout << "eta* levels:";
    for (const auto& [value, count] : levels) std::cout << " " << pretty(value) << " x" << count;
    std::cout << "\nwall time " << decimal(r.wall_seconds) << " s\n";
    write_outputs(o, g, r, false);
    return r.kkt_residual <= o.tol ? kOk : kNotConverged;
}

int run_strength(const Options& o) {
    const auto g = load(o);
    const auto method = o.method == "brute" ? StrengthMethod::BruteForce : StrengthMethod::Mod1Lp;
    if (o.method != "brute" && o.method != "lp") throw Error(ErrorKind::InvalidArgument, "method is lp or brute");
    const auto s = strength(g, method);
    std::cout << "S = " << pretty(s.value) << "\n";
    std::cout << "critical partition: " << format_partition(g, s.critical) << "\n";
    const auto finest = finest_critical_partition(g);
    std::cout << "finest critical partition: " << format_partition(g, finest.partition) << "\n";
    std::cout << "tree packing bound floor(S) = " << floor_rational(s.value) << "\n";
    if (!o.json.empty() || !o.dot.empty()) write_outputs(o, g, analyze(g, report_options(o, false)), false);
    return kOk;
}

int run_denseness(const Options& o) {
    const auto g = load(o);
    const auto method = o.method == "brute" ? DensenessMethod::BruteForce : DensenessMethod::EtaMin;
    const auto d = max_denseness(g, method);
    std::cout << "theta = " << pretty(d.theta) << "\n";
    std::cout << "D = " << pretty(d.dmax) << "\n";
    std::cout << "densest subgraph: " << block_names(g, d.witness) << "\n";
    if (!o.json.empty() || !o.dot.empty()) write_outputs(o, g, analyze(g, report_options(o, false)), false);
    return kOk;
}

void print_node(const DecompositionNode& node, int depth) {
    std::cout << std::string(2 * depth, ' ') << to_string(node.kind) << " |V|=" << node.piece.num_vertices()
              << " |E|=" << node.piece.num_edges();
    if (node.level) std::cout << " level " << pretty(*node.level);
    if (node.terminal) std::cout << " MEO " << pretty(node.meo_contribution);
    std::cout << "\n";
    for (const auto& c : node.children) print_node(c, depth + 1);
}

int run_decompose(const Options& o) {
    const auto g = load(o);
    const auto r = analyze(g, report_options(o, false));
    std::cout << "strategy " << to_string(r.strategy) << "\n";
    print_node(r.decomposition, 0);
    std::cout << "total MEO = " << pretty(total_meo(r.decomposition)) << "\n";
    write_outputs(o, g, r, true);
    return kOk;
}

int run_blocker(const Options& o) {
    const auto g = load(o);
    const auto elements = enumerate_blocker(g, o.max_enum);
    std::cout << "blocker: " << elements.size() << " elements\n";
    for (const auto& el : elements) {
        std::cout << "  k=" << el.k() << " usage=" << pretty(el.usage_value) << " cut={";
        const auto ids = g.edge_ids(el.cut);
        for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? "," : "") << "e" << ids[i];
        std::cout << "} " << format_partition(g, el.partition) << "\n";
    }
    if (!o.json.empty() || !o.dot.empty()) write_outputs(o, g, analyze(g, report_options(o, true)), false);
    return kOk;
}

int run_pack(const Options& o) {
    const auto g = load(o);
    std::vector<int> capacity;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Rational& s = g.sigma(e);
        if (denominator(s) != 1) throw Error(ErrorKind::InvalidArgument, "packing needs integer weights");
        capacity.push_back(static_cast<int>(numerator(s)));
    }
    const auto cert = max_disjoint_tree_packing(g, capacity);
    const auto s = strength(g);
    std::cout << "packing number = " << cert.count << "\n";
    std::cout << "floor(S) = " << floor_rational(s.value) << " (S = " << pretty(s.value) << ")\n";
    for (std::size_t i = 0; i < cert.trees.size(); ++i) {
        std::cout << "  x" << cert.multiplicity[i] << " {";
        const auto ids = g.edge_ids(cert.trees[i].edges);
        for (std::size_t k = 0; k < ids.size(); ++k) std::cout << (k ? "," : "") << "e" << ids[k];
        std::cout << "}\n";
    }
    return kOk;
}

int run_verify(const Options& o) {
    const auto g = load(o);
    const auto r = analyze(g, report_options(o, false));
    bool all = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    };
    Rational sum = 0;
    for (const auto& x : r.eta_star) sum += x;
    check("sum of eta* is |V|-1", sum == g.num_vertices() - 1);
    check("eta* certified optimal", certify_by_levels(g, r.eta_star));
    check("Mod2 * MEO = 1", r.mod2 * r.meo == 1);
    SolverSettings numeric = settings(o);
    numeric.engine = Engine::Numeric;
    const auto sol = mod2_solve(g, numeric);
    check("numeric Mod2 matches", std::abs(sol.value - to_double(r.mod2)) <= 1e-6 * std::max(1.0, sol.value));
    check("KKT residual within tolerance", sol.kkt_residual <= o.tol);
    const auto levels = scaled_usage(g, r.eta_star);
    const Rational top = *std::max_element(levels.begin(), levels.end());
    const Rational bottom = *std::min_element(levels.begin(), levels.end());
    check("1/eta_max = S <= theta <= D = 1/eta_min",
          1 / top == r.strength && r.strength <= r.theta && r.theta <= r.max_denseness && 1 / bottom == r.max_denseness);
    const auto pmax = deflate(g, DeflationStrategy::PMax, r.eta_star);
    const auto pmin = deflate(g, DeflationStrategy::PMin, r.eta_star);
    check("pmax deflation sums to MEO", total_meo(pmax) == r.meo);
    check("pmin deflation sums to MEO", total_meo(pmin) == r.meo);
    check("pmin and pmax leaves agree", leaf_signature(pmax) == leaf_signature(pmin));
    if (g.num_vertices() <= 8) {
        check("brute-force strength equals LP", strength(g, StrengthMethod::BruteForce).value == r.strength);
    }
    if (g.num_vertices() <= 7 && g.num_edges() <= 12) {
        const auto b = verify_blocker_small(g);
        check("blocker characterization", b.ok);
    }
    return all ? kOk : kInternalError;
}

int run_fixtures(const std::string& name) {
    if (name.empty()) {
        for (const auto& n : fixture_names()) {
            const auto g = fixture(n);
            std::cout << n << " |V|=" << g.num_vertices() << " |E|=" << g.num_edges() << "\n";
        }
        return kOk;
    }
    std::cout << serialize_graph(fixture(name));
    return kOk;
}

void check_threads() {
    if (const char* env = std::getenv("TREEMOD_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1) {
            throw Error(ErrorKind::InvalidArgument, "TREEMOD_THREADS must be a positive integer");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning-tree modulus, strength, Beurling deflation and blockers"};
    app.require_subcommand(1);
    Options o;
    std::string fixture_name;

    auto graph_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("graph", o.graph, "edge-list file or fixtures:<name>")->required();
        sub->add_option("--sigma", o.sigma, "uniform | file-column")->check(CLI::IsMember({"uniform", "file-column"}));
        sub->add_option("--engine", o.engine, "exact | numeric | hybrid")
            ->check(CLI::IsMember({"exact", "numeric", "hybrid"}));
        sub->add_option("--tol", o.tol, "numeric tolerance");
        sub->add_option("--json", o.json, "write the JSON report");
        sub->add_option("--dot", o.dot, "write a DOT document");
        sub->add_option("--max-enum", o.max_enum, "vertex cap for enumeration");
        return sub;
    };
    auto* modulus = graph_command("modulus", "Mod2, MEO and eta*");
    auto* strength_cmd = graph_command("strength", "strength and critical partitions");
    strength_cmd->add_option("--method", o.method, "lp | brute")->check(CLI::IsMember({"lp", "brute"}));
    auto* denseness_cmd = graph_command("denseness", "denseness and maximum denseness");
    denseness_cmd->add_option("--method", o.method, "lp | brute")->check(CLI::IsMember({"lp", "brute"}));
    auto* decompose = graph_command("decompose", "deflation through P_max or P_min");
    decompose->add_option("--strategy", o.strategy, "pmax | pmin")->check(CLI::IsMember({"pmax", "pmin"}));
    auto* blocker = graph_command("blocker", "Fulkerson blocker elements");
    auto* pack = graph_command("pack", "maximum edge-disjoint spanning tree packing");
    auto* verify = graph_command("verify", "run the consistency checks");
    auto* fixtures = app.add_subcommand("fixtures", "list fixtures or print one");
    fixtures->add_option("name", fixture_name, "fixture to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        check_threads();
        if (modulus->parsed()) return run_modulus(o);
        if (strength_cmd->parsed()) return run_strength(o);
        if (denseness_cmd->parsed()) return run_denseness(o);
        if (decompose->parsed()) return run_decompose(o);
        if (blocker->parsed()) return run_blocker(o);
        if (pack->parsed()) return run_pack(o);
        if (verify->parsed()) return run_verify(o);
        if (fixtures->parsed()) return run_fixtures(fixture_name);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (classify(e.kind())) {
            case ErrorClass::Input: return kInputError;
            case ErrorClass::Convergence: return kNotConverged;
            case ErrorClass::Internal: return kInternalError;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}
