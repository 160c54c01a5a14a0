#include "treemod/error.hpp"

namespace treemod {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::BadRational: return "BadRational";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::EmptyGraph: return "EmptyGraph";
        case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
        case ErrorKind::BlocksDoNotCoverV: return "BlocksDoNotCoverV";
        case ErrorKind::MismatchedVertexSets: return "MismatchedVertexSets";
        case ErrorKind::TrivialSinglePartition: return "TrivialSinglePartition";
        case ErrorKind::InfeasiblePartition: return "InfeasiblePartition";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::UnknownEdgeId: return "UnknownEdgeId";
        case ErrorKind::TooManyTrees: return "TooManyTrees";
        case ErrorKind::TooManyVertices: return "TooManyVertices";
        case ErrorKind::TooLargeForBruteForce: return "TooLargeForBruteForce";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotBiconnected: return "NotBiconnected";
        case ErrorKind::SameEdge: return "SameEdge";
        case ErrorKind::NoEdges: return "NoEdges";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::PartitionNotBeurling: return "PartitionNotBeurling";
        case ErrorKind::SupportNotInGammaP: return "SupportNotInGammaP";
        case ErrorKind::TooManyTreesForConicLP: return "TooManyTreesForConicLP";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::LpNotConverged: return "LpNotConverged";
        case ErrorKind::CriticalityCheckFailed: return "CriticalityCheckFailed";
        case ErrorKind::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

ErrorClass classify(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotConverged:
        case ErrorKind::LpNotConverged:
            return ErrorClass::Convergence;
        case ErrorKind::CriticalityCheckFailed:
        case ErrorKind::InternalConsistency:
            return ErrorClass::Internal;
        default:
            return ErrorClass::Input;
    }
}

}  // namespace treemod
