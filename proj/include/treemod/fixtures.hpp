#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treemod/graph.hpp"

namespace treemod {

/// Registered names: fig1, c3, k4, bowtie, theta2, path3, wheel7, k6.
const std::vector<std::string>& fixture_names();

/// Throws InvalidArgument for an unknown name.
Multigraph fixture(std::string_view name);

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

/// The registered fixtures plus a handful of small extras used as a test corpus.
std::vector<NamedGraph> corpus();

/// Edge classes of fig1 by id: 45 clique edges, 36 ring and spoke edges, 3 connectors.
struct FigureOneClasses {
    std::vector<int> clique;
    std::vector<int> ring;
    std::vector<int> connector;
};

FigureOneClasses figure_one_classes();

/// `fixtures:<name>` or a path to an edge-list file. Throws IoError.
Multigraph load_graph(const std::string& source);

}  // namespace treemod
