// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace silbound {

enum class ErrorCode {
  // input data
  NonFiniteInput,
  ZeroVector,
  NonBinaryInput,
  // dissimilarity matrix (Def. 1 clauses and the all-zero-row exclusion)
  NotSquare,
  NegativeEntry,
  NonzeroDiagonal,
  Asymmetric,
  AllZeroRow,
  NonFiniteEntry,
  // clusterings
  SizeMismatch,
  LabelOutOfRange,
  EmptyCluster,
  SingleCluster,
  // bounds
  TooFewPoints,
  LambdaOutOfRange,
  KappaOutOfRange,
  // oracle / baselines
  TooLarge,
  KTooLarge,
  KOutOfRange,
  // selection
  NonPositiveUB,
  AlgorithmFailure,
  // plumbing
  InvalidArgument,
  ParseError,
  IoError,
};

/// Stable identifier used in messages and machine-readable error lines.
std::string_view error_name(ErrorCode code) noexcept;

/// True for errors caused by bad input content (exit code 2 in the CLI);
/// IoError is the only non-validation code.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace silbound
