#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radsolve {

enum class ErrorCode {
  DegenerateLeading,
  DegenerateResolvent,
  DegenerateReductionDZero,
  DegenerateReductionEC2Zero,
  DegenerateReductionDBCZero,
  Gamma3Zero,
  Y3Zero,
  FifthRootUndefined,
};

/// Canonical spelling used in reports, e.g. "DegenerateReduction(d_zero)".
std::string_view to_string(ErrorCode code);

/// A documented precondition of a closed-form solver was violated.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(ErrorCode code)
      : std::runtime_error(std::string(to_string(code))), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::DegenerateResolvent: return "DegenerateResolvent";
    case ErrorCode::DegenerateReductionDZero: return "DegenerateReduction(d_zero)";
    case ErrorCode::DegenerateReductionEC2Zero: return "DegenerateReduction(e_c2_zero)";
    case ErrorCode::DegenerateReductionDBCZero: return "DegenerateReduction(d_bc_zero)";
    case ErrorCode::Gamma3Zero: return "Gamma3Zero";
    case ErrorCode::Y3Zero: return "Y3Zero";
    case ErrorCode::FifthRootUndefined: return "FifthRootUndefined";
  }
  return "Unknown";
}

}  // namespace radsolve
