#include "treemod/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

namespace treemod {

namespace {

using Json = nlohmann::ordered_json;

std::string q(const Rational& x) { return format_rational(x); }

Json node_json(const DecompositionNode& node) {
    Json j;
    j["kind"] = to_string(node.kind);
    j["terminal"] = node.terminal;
    j["vertices"] = node.piece.vertex_names();
    std::vector<int> ids;
    for (const auto& e : node.piece.edges()) ids.push_back(e.id);
    j["edge_ids"] = ids;
    j["level"] = node.level ? Json(q(*node.level)) : Json(nullptr);
    j["meo"] = q(node.meo_contribution);
    Json children = Json::array();
    for (const auto& c : node.children) children.push_back(node_json(c));
    j["children"] = std::move(children);
    return j;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

AnalysisReport analyze(const Multigraph& g, const ReportOptions& options) {
    require_connected(g);
    const auto start = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.sigma_total = g.total_sigma();
    r.unit_weights = g.unit_weights();
    r.engine = options.settings.engine;
    r.tol = options.settings.tol;
    r.strategy = options.strategy;

    SolverSettings numeric = options.settings;
    numeric.engine = Engine::Numeric;
    const auto sol = mod2_solve(g, numeric);
    r.eta_numeric = sol.eta_star;
    r.kkt_residual = sol.kkt_residual;
    r.eta_star = exact_eta_star(g, options.settings.engine, options.settings);

    r.strength = strength(g).value;
    r.theta = denseness(g);
    const auto levels = scaled_usage(g, r.eta_star);
    r.max_denseness = 1 / *std::min_element(levels.begin(), levels.end());
    r.homogeneous = r.strength == r.theta;
    r.meo = weighted_energy(g, r.eta_star);
    r.mod2 = 1 / r.meo;
    r.decomposition = deflate(g, options.strategy, r.eta_star);
    if (options.include_blocker) r.blocker = enumerate_blocker(g, options.max_enum);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

// FNV-1a over the weights in edge order, as "p/q" strings.
std::string sigma_digest(const Multigraph& g) {
    std::uint64_t h = 14695981039346656037ull;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (char ch : format_rational(g.sigma(e)) + ",") {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace

std::string report_json(const Multigraph& g, const AnalysisReport& r) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["graph"] = {{"n", r.n},
                  {"m", r.m},
                  {"sigma_total", q(r.sigma_total)},
                  {"sigma_digest", sigma_digest(g)},
                  {"unit_weights", r.unit_weights}};
    j["engine"] = to_string(r.engine);
    j["tol"] = r.tol;
    j["strength"] = q(r.strength);
    j["theta"] = q(r.theta);
    j["denseness"] = q(r.max_denseness);
    j["homogeneous"] = r.homogeneous;
    Json eta = Json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        eta.push_back({{"edge", g.edge(e).id}, {"value", q(r.eta_star[e])}, {"approx", to_double(r.eta_star[e])}});
    }
    j["eta_star"] = std::move(eta);
    j["meo"] = q(r.meo);
    j["mod2"] = q(r.mod2);
    j["decimal"] = {{"strength", to_double(r.strength)}, {"theta", to_double(r.theta)},
                    {"denseness", to_double(r.max_denseness)}, {"meo", to_double(r.meo)},
                    {"mod2", to_double(r.mod2)}};
    j["kkt_residual_ok"] = r.kkt_residual <= r.tol;
    j["strategy"] = to_string(r.strategy);
    j["decomposition"] = node_json(r.decomposition);
    if (r.blocker) {
        Json blocker = Json::array();
        for (const auto& el : *r.blocker) {
            Json blocks = Json::array();
            for (const auto& b : el.partition.blocks()) {
                std::vector<std::string> names;
                for (int v : b) names.push_back(g.vertex_name(v));
                blocks.push_back(names);
            }
            blocker.push_back({{"blocks", std::move(blocks)},
                               {"k", el.k()},
                               {"cut_edge_ids", g.edge_ids(el.cut)},
                               {"usage_value", q(el.usage_value)}});
        }
        j["blocker"] = std::move(blocker);
    }
    return j.dump(2) + "\n";
}

std::string style_for_level(std::size_t index) {
    static const char* base[] = {"solid", "dashed", "dotted"};
    std::string style = base[index % 3];
    if (index >= 3) style += ",bold";
    return style;
}

std::string export_dot(const Multigraph& g, const ExactDensity& eta_star) {
    const auto levels = scaled_usage(g, eta_star);
    const std::set<Rational> distinct(levels.begin(), levels.end());
    const std::vector<Rational> order(distinct.begin(), distinct.end());
    std::ostringstream out;
    out << "graph G {\n";
    out << "  // sigma^-1 eta* levels, increasing\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        out << "  // level " << q(order[i]) << ": " << style_for_level(i);
        if (i >= 6) out << ", penwidth=" << 1 + i / 3;
        out << "\n";
    }
    for (int v = 0; v < g.num_vertices(); ++v) out << "  " << quoted(g.vertex_name(v)) << ";\n";
    std::vector<int> by_id(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) by_id[e] = e;
    std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
    for (int e : by_id) {
        const auto i = static_cast<std::size_t>(
            std::lower_bound(order.begin(), order.end(), levels[e]) - order.begin());
        out << "  " << quoted(g.vertex_name(g.edge(e).u)) << " -- " << quoted(g.vertex_name(g.edge(e).v))
            << " [id=\"e" << g.edge(e).id << "\", style=\"" << style_for_level(i) << "\"";
        if (i >= 6) out << ", penwidth=" << 1 + i / 3;
        out << ", label=\"" << q(eta_star[e]) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string decomposition_dot(const DecompositionNode& root) {
    std::ostringstream out;
    out << "digraph decomposition {\n  node [shape=box];\n";
    int counter = 0;
    auto visit = [&](auto&& self, const DecompositionNode& node) -> int {
        const int id = counter++;
        out << "  n" << id << " [label=\"" << to_string(node.kind) << "\\n|V|=" << node.piece.num_vertices()
            << " |E|=" << node.piece.num_edges();
        if (node.level) out << "\\nlevel " << q(*node.level);
        if (node.terminal) out << "\\nMEO " << q(node.meo_contribution);
        out << "\"" << (node.terminal ? "" : ", style=dashed") << "];\n";
        for (const auto& c : node.children) {
            const int child = self(self, c);
            out << "  n" << id << " -> n" << child << ";\n";
        }
        return id;
    };
    visit(visit, root);
    out << "}\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorKind::IoError, "write failed for '" + path + "'");
}

}  // namespace treemod
