#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treemod/beurling.hpp"
#include "treemod/blocker.hpp"
#include "treemod/graph.hpp"
#include "treemod/modulus.hpp"

namespace treemod {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
    SolverSettings settings;
    DeflationStrategy strategy = DeflationStrategy::PMax;
    bool include_blocker = false;
    int max_enum = kDefaultPartitionVertexCap;
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    Rational sigma_total;
    bool unit_weights = true;
    Rational strength;
    Rational theta;
    Rational max_denseness;
    bool homogeneous = false;
    ExactDensity eta_star;
    Density eta_numeric;
    Rational meo;
    Rational mod2;
    DecompositionNode decomposition;
    DeflationStrategy strategy = DeflationStrategy::PMax;
    std::optional<std::vector<BlockerElement>> blocker;
    Engine engine = Engine::Hybrid;
    double tol = 0;
    double kkt_residual = 0;
    double wall_seconds = 0;  // reported to humans only
};

AnalysisReport analyze(const Multigraph& g, const ReportOptions& options = {});

/// Byte-stable JSON document. Rationals are "p/q" strings.
std::string report_json(const Multigraph& g, const AnalysisReport& report);

/// Undirected DOT with edges styled by sigma^{-1} eta* level, increasing:
/// solid, dashed, dotted, then bold variants.
std::string export_dot(const Multigraph& g, const ExactDensity& eta_star);

/// The decomposition tree as a DOT digraph.
std::string decomposition_dot(const DecompositionNode& root);

std::string style_for_level(std::size_t index);

/// Writes text to path; throws IoError.
void write_file(const std::string& path, const std::string& text);

}  // namespace treemod
