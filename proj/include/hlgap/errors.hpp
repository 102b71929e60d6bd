#ifndef HLGAP_ERRORS_HPP
#define HLGAP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hlgap {

enum class ErrorCode {
  NotSymmetric,
  DimensionMismatch,
  SingularMatrix,
  InternalError,
  NonBinaryInput,
  ZeroDiagonal,
  NotVoltageGraph,
  NoPositiveEigenvalue,
  NoNegativeEigenvalue,
  ZeroEigenvalue,
  DefiniteMatrix,
  NotAPermutation,
  NotBridgeable,
  ColumnConstraintViolated,
  InfeasiblePoint,
  SpecInvalid,
  NoFeasibleCandidate,
  ParseError,
  IoError,
};

/// Stable machine-readable name, e.g. "SingularMatrix".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hlgap

#endif  // HLGAP_ERRORS_HPP
