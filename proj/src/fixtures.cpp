#include "treemod/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace treemod {

namespace {

constexpr int kFigBlocks = 3;
constexpr int kFigBlockEdges = 27;

Multigraph make(const std::vector<std::string>& names, const std::vector<std::pair<int, int>>& pairs,
                std::vector<Rational> sigma = {}) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        edges.push_back({static_cast<int>(i), pairs[i].first, pairs[i].second});
    }
    if (sigma.empty()) sigma.assign(pairs.size(), 1);
    return Multigraph(names, std::move(edges), std::move(sigma));
}

std::vector<std::string> letters(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

std::vector<std::pair<int, int>> complete(int n, int offset = 0) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) out.emplace_back(offset + i, offset + j);
    }
    return out;
}

Multigraph figure_one() {
    // Per block: clique vertices 0..5, ring vertices 6..11 (ring i spokes to clique i).
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < kFigBlocks; ++b) {
        const int base = 12 * b;
        for (int i = 0; i < 6; ++i) names.push_back("k" + std::to_string(b) + "_" + std::to_string(i));
        for (int i = 0; i < 6; ++i) names.push_back("r" + std::to_string(b) + "_" + std::to_string(i));
        for (auto pr : complete(6, base)) pairs.push_back(pr);
        for (int i = 0; i < 6; ++i) pairs.emplace_back(base + 6 + i, base + 6 + (i + 1) % 6);
        for (int i = 0; i < 6; ++i) pairs.emplace_back(base + 6 + i, base + i);
    }
    for (int b = 0; b < kFigBlocks; ++b) {
        const int next = (b + 1) % kFigBlocks;
        pairs.emplace_back(12 * b + 6, 12 * next + 9);
    }
    return make(names, pairs);
}

Multigraph wheel(int rim) {
    std::vector<std::string> names{"hub"};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < rim; ++i) names.push_back("r" + std::to_string(i));
    for (int i = 0; i < rim; ++i) pairs.emplace_back(1 + i, 1 + (i + 1) % rim);
    for (int i = 0; i < rim; ++i) pairs.emplace_back(0, 1 + i);
    return make(names, pairs);
}

Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return make(letters(n), pairs);
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"fig1", "c3", "k4", "bowtie", "theta2", "path3", "wheel7", "k6"};
    return names;
}

Multigraph fixture(std::string_view name) {
    if (name == "fig1") return figure_one();
    if (name == "c3") return cycle(3);
    if (name == "k4") return make({"1", "2", "3", "4"}, complete(4));
    if (name == "bowtie") return make(letters(5), {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    if (name == "theta2") return make(letters(2), {{0, 1}, {0, 1}, {0, 1}});
    if (name == "path3") return make(letters(3), {{0, 1}, {1, 2}});
    if (name == "wheel7") return wheel(6);
    if (name == "k6") return make(letters(6), complete(6));
    throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

std::vector<NamedGraph> corpus() {
    std::vector<NamedGraph> out;
    for (const auto& name : fixture_names()) out.push_back({name, fixture(name)});
    out.push_back({"c5", cycle(5)});
    out.push_back({"diamond", make(letters(4), {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
    out.push_back({"house", make(letters(5), {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})});
    out.push_back({"k23", make(letters(5), {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})});
    out.push_back({"prism", make(letters(6), {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})});
    out.push_back({"k4_doubled", make({"1", "2", "3", "4"}, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
    out.push_back({"triangle_tail", make(letters(4), {{0, 1}, {1, 2}, {2, 0}, {2, 3}})});
    out.push_back({"path3_weighted", make(letters(3), {{0, 1}, {1, 2}}, {1, 2})});
    out.push_back({"wheel5", wheel(4)});
    return out;
}

FigureOneClasses figure_one_classes() {
    FigureOneClasses out;
    for (int b = 0; b < kFigBlocks; ++b) {
        for (int i = 0; i < kFigBlockEdges; ++i) {
            (i < 15 ? out.clique : out.ring).push_back(kFigBlockEdges * b + i);
        }
    }
    for (int i = 0; i < kFigBlocks; ++i) out.connector.push_back(kFigBlocks * kFigBlockEdges + i);
    return out;
}

Multigraph load_graph(const std::string& source) {
    const std::string prefix = "fixtures:";
    if (source.rfind(prefix, 0) == 0) return fixture(source.substr(prefix.size()));
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::IoError, "cannot read '" + source + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph(text.str());
}

}  // namespace treemod
