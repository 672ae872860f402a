#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degseq {

enum class ErrorCode {
  kInvalidSequence,
  kOutOfRange,
  kBadParams,
  kNegativeCapacity,
  kHypothesisViolated,
  kNonMaximumMatching,
  kInvalidSwap,
  kMismatchedSequences,
  kOracleCapExceeded,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidSequence: return "InvalidSequence";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kNegativeCapacity: return "NegativeCapacity";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kNonMaximumMatching: return "NonMaximumMatching";
    case ErrorCode::kInvalidSwap: return "InvalidSwap";
    case ErrorCode::kMismatchedSequences: return "MismatchedSequences";
    case ErrorCode::kOracleCapExceeded: return "OracleCapExceeded";
  }
  return "Unknown";
}

// Every library failure is reported through this type. Negative answers
// (infeasible sequences, empty intervals) are values, not errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace degseq
