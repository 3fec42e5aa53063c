// SPDX-License-Identifier: Apache-2.0
#include "silbound/selection.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "silbound/bounds.hpp"
#include "silbound/error.hpp"

namespace silbound {

namespace {

Clustering run_algorithm(const ClusteringAlgorithm& algorithm, std::size_t k, std::size_t n) {
  std::optional<Clustering> result;
  try {
    result.emplace(algorithm(k));
  } catch (const std::exception& e) {
    throw Error(ErrorCode::AlgorithmFailure, "K=" + std::to_string(k) + ": " + e.what());
  }
  if (result->size() != n || static_cast<std::size_t>(result->k()) != k) {
    throw Error(ErrorCode::AlgorithmFailure, "K=" + std::to_string(k) + ": algorithm returned " +
                                                 std::to_string(result->k()) + " clusters over " +
                                                 std::to_string(result->size()) + " points");
  }
  return std::move(*result);
}

void check_k_range(std::size_t k_min, std::size_t k_max, std::size_t n) {
  if (k_min < 2 || k_max < k_min || k_max > n) {
    throw Error(ErrorCode::InvalidArgument, "K range " + std::to_string(k_min) + ".." + std::to_string(k_max) +
                                                " must lie within 2.." + std::to_string(n));
  }
}

}  // namespace

double worst_case_relative_error(double ub, double s_hat) {
  if (!(ub > 0.0)) {
    throw Error(ErrorCode::NonPositiveUB, "upper bound must be positive, got " + std::to_string(ub));
  }
  return (ub - s_hat) / ub;
}

SelectionResult select(const DissimilarityMatrix& delta, const ClusteringAlgorithm& algorithm,
                       const EarlyStopConfig& config) {
  const std::size_t n = delta.size();
  if (!(config.epsilon >= 0.0 && config.epsilon <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in [0, 1]");
  }
  if (!(config.tau >= 0.0 && config.tau <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "tau must lie in [0, 1]");
  }
  check_k_range(2, config.k_max, n);

  SelectionResult result;
  result.tau = config.tau;
  result.ub = bound_report(delta, config.kappa.value_or(1)).ub;
  result.worst_case_rel_err = std::numeric_limits<double>::quiet_NaN();
  // ub = 0 falls in here for every admissible tau.
  if (result.ub <= config.tau) {
    result.outcome = Outcome::NotClusterable;
    return result;
  }

  result.outcome = Outcome::Selected;
  for (std::size_t k = 2; k <= config.k_max; ++k) {
    Clustering candidate = run_algorithm(algorithm, k, n);
    const double value = asw(delta, candidate);
    result.evaluated_ks.push_back(k);
    result.trace.push_back({k, value, worst_case_relative_error(result.ub, value)});
    if (!result.best || value > result.best_asw) {
      result.best = std::move(candidate);
      result.best_asw = value;
      result.best_k = k;
      result.worst_case_rel_err = worst_case_relative_error(result.ub, value);
      if (result.worst_case_rel_err < config.epsilon) {
        result.stopped_early = true;
        return result;
      }
    }
  }
  return result;
}

std::vector<KEvaluation> sweep(const DissimilarityMatrix& delta, const ClusteringAlgorithm& algorithm, double ub,
                               std::size_t k_min, std::size_t k_max) {
  const std::size_t n = delta.size();
  check_k_range(k_min, k_max, n);
  std::vector<KEvaluation> rows;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const double value = asw(delta, run_algorithm(algorithm, k, n));
    rows.push_back({k, value, worst_case_relative_error(ub, value)});
  }
  return rows;
}

}  // namespace silbound
