// SPDX-License-Identifier: Apache-2.0
#include "silbound/error.hpp"

namespace silbound {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonBinaryInput: return "NonBinaryInput";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::Asymmetric: return "Asymmetric";
    case ErrorCode::AllZeroRow: return "AllZeroRow";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::EmptyCluster: return "EmptyCluster";
    case ErrorCode::SingleCluster: return "SingleCluster";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::KappaOutOfRange: return "KappaOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::NonPositiveUB: return "NonPositiveUB";
    case ErrorCode::AlgorithmFailure: return "AlgorithmFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept { return code != ErrorCode::IoError; }

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace silbound
