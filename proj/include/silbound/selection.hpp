// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "silbound/matrix.hpp"
#include "silbound/silhouette.hpp"

namespace silbound {

/// Produces a K-clustering of the data the selection loop is run on.
using ClusteringAlgorithm = std::function<Clustering(std::size_t k)>;

struct EarlyStopConfig {
  /// Relative error tolerance in [0, 1]; 0 disables early stopping.
  double epsilon = 0.05;
  /// Clusterability threshold in [0, 1]: data with UB <= tau is rejected.
  double tau = 0.0;
  std::size_t k_max = 10;
  /// When set, the gate and the stopping rule use UB_κ.
  std::optional<std::size_t> kappa;
};

enum class Outcome { NotClusterable, Selected };

struct KEvaluation {
  std::size_t k = 0;
  double asw = 0.0;
  double worst_case_rel_err = 0.0;
};

struct SelectionResult {
  Outcome outcome = Outcome::NotClusterable;
  std::optional<Clustering> best;
  double best_asw = 0.0;
  std::size_t best_k = 0;
  double ub = 0.0;
  double tau = 0.0;
  /// (ub − best_asw)/ub; NaN when nothing was evaluated.
  double worst_case_rel_err = 0.0;
  bool stopped_early = false;
  std::vector<std::size_t> evaluated_ks;
  /// One entry per evaluated K, in evaluation order.
  std::vector<KEvaluation> trace;
};

/// (ub − s_hat)/ub. Exceeds 1 when s_hat < 0. Throws NonPositiveUB for ub <= 0.
double worst_case_relative_error(double ub, double s_hat);

/**
 * Early-stopping ASW model selection over K = 2..k_max.
 *
 * UB (or UB_κ) is computed once. If it does not exceed tau the data is
 * reported NotClusterable without running the algorithm. Otherwise K is
 * increased from 2; whenever a new best ASW is found and its worst-case
 * relative error (ub − best)/ub drops below epsilon the loop returns. Without
 * a stop the best over the whole range is returned.
 *
 * Errors: InvalidArgument for an out-of-range config, AlgorithmFailure when
 * the algorithm throws or returns something other than a K-clustering of the
 * n points, and the bound errors (TooFewPoints, KappaOutOfRange).
 */
SelectionResult select(const DissimilarityMatrix& delta, const ClusteringAlgorithm& algorithm,
                       const EarlyStopConfig& config);

/**
 * Evaluates every K in [k_min, k_max] without stopping and reports each
 * ASW with its worst-case relative error against `ub`.
 */
std::vector<KEvaluation> sweep(const DissimilarityMatrix& delta, const ClusteringAlgorithm& algorithm, double ub,
                               std::size_t k_min, std::size_t k_max);

}  // namespace silbound
