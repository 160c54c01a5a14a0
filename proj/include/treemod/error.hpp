#pragma once

#include <stdexcept>
#include <string>

namespace treemod {

enum class ErrorKind {
    // input errors
    SelfLoop,
    BadRational,
    NonPositiveWeight,
    EmptyGraph,
    EmptyVertexSet,
    BlocksDoNotCoverV,
    MismatchedVertexSets,
    TrivialSinglePartition,
    InfeasiblePartition,
    Disconnected,
    UnknownEdgeId,
    TooManyTrees,
    TooManyVertices,
    TooLargeForBruteForce,
    TooLarge,
    NotBiconnected,
    SameEdge,
    NoEdges,
    NotAdmissible,
    PartitionNotBeurling,
    SupportNotInGammaP,
    TooManyTreesForConicLP,
    IoError,
    InvalidArgument,
    // solver did not converge
    NotConverged,
    LpNotConverged,
    // internal consistency violations
    CriticalityCheckFailed,
    InternalConsistency,
};

const char* to_string(ErrorKind kind);

enum class ErrorClass { Input, Convergence, Internal };

ErrorClass classify(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace treemod
