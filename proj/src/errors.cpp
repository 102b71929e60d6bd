#include "hlgap/errors.hpp"

namespace hlgap {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::NonBinaryInput: return "NonBinaryInput";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::NotVoltageGraph: return "NotVoltageGraph";
    case ErrorCode::NoPositiveEigenvalue: return "NoPositiveEigenvalue";
    case ErrorCode::NoNegativeEigenvalue: return "NoNegativeEigenvalue";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::DefiniteMatrix: return "DefiniteMatrix";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotBridgeable: return "NotBridgeable";
    case ErrorCode::ColumnConstraintViolated: return "ColumnConstraintViolated";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::NoFeasibleCandidate: return "NoFeasibleCandidate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace hlgap
