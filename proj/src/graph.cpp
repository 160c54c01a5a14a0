#include "treemod/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace treemod {

// ---- Multigraph ------------------------------------------------------------

Multigraph::Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                       std::vector<Rational> sigma)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), sigma_(std::move(sigma)) {
    if (sigma_.size() != edges_.size()) {
        throw Error(ErrorKind::InvalidArgument, "sigma has " + std::to_string(sigma_.size()) +
                                                    " entries for " + std::to_string(edges_.size()) +
                                                    " edges");
    }
    incident_.assign(names_.size(), {});
    for (int e = 0; e < num_edges(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= num_vertices() || ed.v >= num_vertices()) {
            throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        }
        if (ed.u == ed.v) throw Error(ErrorKind::SelfLoop, "edge id " + std::to_string(ed.id));
        if (sigma_[e] <= 0) {
            throw Error(ErrorKind::NonPositiveWeight, "edge id " + std::to_string(ed.id));
        }
        incident_[ed.u].push_back(e);
        incident_[ed.v].push_back(e);
    }
}

Multigraph Multigraph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::string> names(n);
    for (int v = 0; v < n; ++v) names[v] = std::to_string(v);
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({static_cast<int>(edges.size()), u, v});
    return Multigraph(std::move(names), std::move(edges), std::vector<Rational>(pairs.size(), 1));
}

Density Multigraph::sigma_double() const {
    Density out(sigma_.size());
    for (std::size_t e = 0; e < sigma_.size(); ++e) out[e] = to_double(sigma_[e]);
    return out;
}

Rational Multigraph::total_sigma() const {
    Rational sum = 0;
    for (const auto& s : sigma_) sum += s;
    return sum;
}

bool Multigraph::unit_weights() const {
    return std::all_of(sigma_.begin(), sigma_.end(), [](const Rational& s) { return s == 1; });
}

int Multigraph::find_vertex(std::string_view name) const {
    for (int v = 0; v < num_vertices(); ++v) {
        if (names_[v] == name) return v;
    }
    return -1;
}

int Multigraph::local_edge(int id) const {
    for (int e = 0; e < num_edges(); ++e) {
        if (edges_[e].id == id) return e;
    }
    throw Error(ErrorKind::UnknownEdgeId, std::to_string(id));
}

std::vector<int> Multigraph::edge_ids(const EdgeSet& local) const {
    std::vector<int> ids;
    ids.reserve(local.size());
    for (int e : local) ids.push_back(edges_[e].id);
    return ids;
}

Multigraph Multigraph::with_sigma(std::vector<Rational> sigma) const {
    return Multigraph(names_, edges_, std::move(sigma));
}

// ---- UnionFind -------------------------------------------------------------

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
}

// ---- Partition -------------------------------------------------------------

Partition Partition::from_blocks(int n, std::vector<VertexSet> blocks) {
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw Error(ErrorKind::BlocksDoNotCoverV, "empty block");
        for (int v : blocks[b]) {
            if (v < 0 || v >= n) throw Error(ErrorKind::BlocksDoNotCoverV, "vertex out of range");
            if (labels[v] != -1) {
                throw Error(ErrorKind::BlocksDoNotCoverV, "vertex " + std::to_string(v) +
                                                              " appears in two blocks");
            }
            labels[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (labels[v] == -1) {
            throw Error(ErrorKind::BlocksDoNotCoverV, "vertex " + std::to_string(v) + " uncovered");
        }
    }
    return from_labels(labels);
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    // Relabel by first appearance; since vertices are scanned in increasing
    // order this orders blocks by minimal member.
    Partition p;
    std::unordered_map<int, int> remap;
    p.block_of_.resize(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto [it, inserted] = remap.try_emplace(labels[v], static_cast<int>(p.blocks_.size()));
        if (inserted) p.blocks_.emplace_back();
        p.blocks_[it->second].push_back(static_cast<int>(v));
        p.block_of_[v] = it->second;
    }
    return p;
}

Partition Partition::singletons(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

Partition Partition::whole(int n) { return from_labels(std::vector<int>(n, 0)); }

std::string format_partition(const Multigraph& g, const Partition& p) {
    std::ostringstream os;
    os << "{";
    for (int b = 0; b < p.num_blocks(); ++b) {
        if (b) os << ",";
        os << "{";
        for (std::size_t i = 0; i < p.block(b).size(); ++i) {
            if (i) os << ",";
            os << g.vertex_name(p.block(b)[i]);
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

// ---- parsing ---------------------------------------------------------------

Multigraph parse_graph(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, int, std::less<>> index;
    std::vector<Edge> edges;
    std::vector<Rational> sigma;

    auto vertex = [&](const std::string& token) {
        auto [it, inserted] = index.try_emplace(token, static_cast<int>(names.size()));
        if (inserted) names.push_back(token);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::istringstream is{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; is >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw Error(ErrorKind::InvalidArgument, where + ": expected `<u> <v> [w]`");
        }
        if (tokens[0] == tokens[1]) throw Error(ErrorKind::SelfLoop, where);
        Rational w = 1;
        if (tokens.size() == 3) {
            auto parsed = parse_rational(tokens[2]);
            if (!parsed) throw Error(ErrorKind::BadRational, where + ": '" + tokens[2] + "'");
            w = *parsed;
            if (w <= 0) throw Error(ErrorKind::NonPositiveWeight, where);
        }
        int u = vertex(tokens[0]);
        int v = vertex(tokens[1]);
        edges.push_back({static_cast<int>(edges.size()), u, v});
        sigma.push_back(w);
        if (end == text.size()) break;
    }
    if (edges.empty()) throw Error(ErrorKind::EmptyGraph, "no edges");
    return Multigraph(std::move(names), std::move(edges), std::move(sigma));
}

std::string serialize_graph(const Multigraph& g) {
    std::ostringstream os;
    for (int e = 0; e < g.num_edges(); ++e) {
        os << g.vertex_name(g.edge(e).u) << ' ' << g.vertex_name(g.edge(e).v) << ' '
           << format_rational(g.sigma(e)) << '\n';
    }
    return os.str();
}

// ---- structure ---------------------------------------------------------------

std::vector<int> component_labels(const Multigraph& g, const std::vector<bool>& use) {
    UnionFind uf(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        if (use[e]) uf.unite(g.edge(e).u, g.edge(e).v);
    }
    std::vector<int> labels(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) labels[v] = uf.find(v);
    return labels;
}

bool is_connected(const Multigraph& g) {
    if (g.num_vertices() == 0) return false;
    UnionFind uf(g.num_vertices());
    for (const auto& e : g.edges()) uf.unite(e.u, e.v);
    return uf.components() == 1;
}

void require_connected(const Multigraph& g) {
    if (g.num_vertices() < 2) {
        throw Error(ErrorKind::Disconnected, "graph needs at least two vertices");
    }
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

Partition components_without(const Multigraph& g, const EdgeSet& removed) {
    std::vector<bool> use(g.num_edges(), true);
    for (int e : removed) use[e] = false;
    return Partition::from_labels(component_labels(g, use));
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& vertices) {
    if (vertices.empty()) throw Error(ErrorKind::EmptyVertexSet, "induced_subgraph");
    std::vector<int> local(g.num_vertices(), -1);
    VertexSet sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::string> names;
    for (int v : sorted) {
        if (v < 0 || v >= g.num_vertices()) {
            throw Error(ErrorKind::InvalidArgument, "vertex out of range");
        }
        local[v] = static_cast<int>(names.size());
        names.push_back(g.vertex_name(v));
    }
    std::vector<Edge> edges;
    std::vector<Rational> sigma;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (local[ed.u] >= 0 && local[ed.v] >= 0) {
            edges.push_back({ed.id, local[ed.u], local[ed.v]});
            sigma.push_back(g.sigma(e));
        }
    }
    return Multigraph(std::move(names), std::move(edges), std::move(sigma));
}

Multigraph edge_induced_subgraph(const Multigraph& g, const EdgeSet& edge_set) {
    std::vector<int> local(g.num_vertices(), -1);
    std::vector<bool> touched(g.num_vertices(), false);
    for (int e : edge_set) {
        touched[g.edge(e).u] = true;
        touched[g.edge(e).v] = true;
    }
    std::vector<std::string> names;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (touched[v]) {
            local[v] = static_cast<int>(names.size());
            names.push_back(g.vertex_name(v));
        }
    }
    EdgeSet sorted = edge_set;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> edges;
    std::vector<Rational> sigma;
    for (int e : sorted) {
        edges.push_back({g.edge(e).id, local[g.edge(e).u], local[g.edge(e).v]});
        sigma.push_back(g.sigma(e));
    }
    return Multigraph(std::move(names), std::move(edges), std::move(sigma));
}

Multigraph shrink(const Multigraph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices()) {
        throw Error(ErrorKind::BlocksDoNotCoverV, "partition is over a different vertex set");
    }
    std::vector<std::string> names;
    for (const auto& block : p.blocks()) {
        if (block.size() == 1) {
            names.push_back(g.vertex_name(block.front()));
            continue;
        }
        std::string name = "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) name += ",";
            name += g.vertex_name(block[i]);
        }
        names.push_back(name + "}");
    }
    std::vector<Edge> edges;
    std::vector<Rational> sigma;
    for (int e = 0; e < g.num_edges(); ++e) {
        int bu = p.block_of(g.edge(e).u);
        int bv = p.block_of(g.edge(e).v);
        if (bu != bv) {
            edges.push_back({g.edge(e).id, bu, bv});
            sigma.push_back(g.sigma(e));
        }
    }
    return Multigraph(std::move(names), std::move(edges), std::move(sigma));
}

CutInfo cut_set_and_feasibility(const Multigraph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices()) {
        throw Error(ErrorKind::BlocksDoNotCoverV, "partition is over a different vertex set");
    }
    CutInfo info{{}, true};
    UnionFind uf(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (p.block_of(ed.u) != p.block_of(ed.v)) {
            info.cut.push_back(e);
        } else {
            uf.unite(ed.u, ed.v);
        }
    }
    info.feasible = uf.components() == p.num_blocks();
    return info;
}

EdgeSet cut_set(const Multigraph& g, const Partition& p) {
    return cut_set_and_feasibility(g, p).cut;
}

bool is_feasible(const Multigraph& g, const Partition& p) {
    return cut_set_and_feasibility(g, p).feasible;
}

Rational partition_weight(const Multigraph& g, const Partition& p) {
    if (p.num_blocks() < 2) throw Error(ErrorKind::TrivialSinglePartition, "k_P = 1");
    auto info = cut_set_and_feasibility(g, p);
    if (!info.feasible) throw Error(ErrorKind::InfeasiblePartition, format_partition(g, p));
    Rational sum = 0;
    for (int e : info.cut) sum += g.sigma(e);
    return sum / (p.num_blocks() - 1);
}

Rational denseness(const Multigraph& g) {
    if (g.num_vertices() < 2) throw Error(ErrorKind::NoEdges, "denseness needs two vertices");
    return g.total_sigma() / (g.num_vertices() - 1);
}

bool is_vertex_biconnected(const Multigraph& g) {
    const int n = g.num_vertices();
    if (n < 2 || !is_connected(g)) return false;
    if (n == 2) return true;

    // Iterative Tarjan articulation-point search from vertex 0.
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    int root_children = 0;
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, -1, 0}};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& inc = g.incident(f.v);
        if (f.next < inc.size()) {
            int e = inc[f.next++];
            if (e == f.parent_edge) continue;
            int w = g.other_end(e, f.v);
            if (disc[w] == -1) {
                disc[w] = low[w] = timer++;
                if (f.v == 0) ++root_children;
                stack.push_back({w, e, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                int parent = stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (parent != 0 && low[v] >= disc[parent]) return false;
            }
        }
    }
    return root_children < 2;
}

bool is_finer(const Partition& p, const Partition& q) {
    if (p.num_vertices() != q.num_vertices()) {
        throw Error(ErrorKind::MismatchedVertexSets, "partitions cover different vertex sets");
    }
    // p finer than q iff each block of p lies inside a single block of q.
    for (const auto& block : p.blocks()) {
        int target = q.block_of(block.front());
        for (int v : block) {
            if (q.block_of(v) != target) return false;
        }
    }
    return true;
}

}  // namespace treemod
