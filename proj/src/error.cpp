#include "mklab/error.hpp"

namespace mklab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::NotAFlat: return "NotAFlat";
    case ErrorCode::CageViolation: return "CageViolation";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::LoopyMatroid: return "LoopyMatroid";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::DegreeExceeded: return "DegreeExceeded";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::DegreeExceedsCage: return "DegreeExceedsCage";
    case ErrorCode::NoSpanningSubset: return "NoSpanningSubset";
    case ErrorCode::NotAMatroidPolymatroid: return "NotAMatroidPolymatroid";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::HasLoopOrColoop: return "HasLoopOrColoop";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::ComputationLimit: return "ComputationLimit";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::int64_t> witness)
    : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

}  // namespace mklab
