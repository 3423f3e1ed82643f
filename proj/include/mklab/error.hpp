#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mklab {

enum class ErrorCode {
  AxiomViolation,
  SizeExceeded,
  InvalidRank,
  OverlapError,
  NotAFlat,
  CageViolation,
  EmptySubset,
  LoopyMatroid,
  BasisMismatch,
  DegreeExceeded,
  NotQuadratic,
  NonIntegralDegree,
  DegreeExceedsCage,
  NoSpanningSubset,
  NotAMatroidPolymatroid,
  InvalidInput,
  HasLoopOrColoop,
  NotNested,
  ComputationLimit,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

// Domain error. The witness is a flat list of integers whose meaning depends
// on the code (subset masks for axiom failures, an index for cage failures, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::int64_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

}  // namespace mklab
