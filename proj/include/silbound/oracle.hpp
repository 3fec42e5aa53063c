// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "silbound/matrix.hpp"
#include "silbound/silhouette.hpp"

namespace silbound {

/// Largest n the exhaustive oracle accepts (Bell(15) ≈ 1.38e9 partitions).
inline constexpr std::size_t kMaxOraclePoints = 15;

struct PartitionConstraints {
  std::size_t min_k = 1;
  /// 0 means no upper limit.
  std::size_t max_k = 0;
  std::size_t min_size = 1;

  static PartitionConstraints exactly(std::size_t k) { return {k, k, 1}; }
};

/**
 * Enumerates set partitions of {0..n−1} as restricted-growth strings in
 * lexicographic order. Constraints prune the search tree: a prefix is only
 * extended when some completion satisfies all of them, so no emitted
 * partition is filtered after the fact.
 *
 *     PartitionEnumerator it(5, {2, 0, 1});
 *     while (it.next()) use(it.assignment(), it.blocks());
 */
class PartitionEnumerator {
 public:
  /// Throws TooLarge for n > kMaxOraclePoints, InvalidArgument for n < 1.
  PartitionEnumerator(std::size_t n, PartitionConstraints constraints = {});

  /// Advances to the next partition; false once exhausted.
  bool next();

  std::span<const std::size_t> assignment() const noexcept { return assignment_; }
  std::span<const std::size_t> sizes() const noexcept { return {sizes_.data(), blocks_}; }
  std::size_t blocks() const noexcept { return blocks_; }

 private:
  bool feasible(std::size_t filled) const;
  bool try_value(std::size_t pos, std::size_t value);
  void unassign(std::size_t pos);

  std::size_t n_;
  PartitionConstraints constraints_;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> sizes_;
  std::size_t blocks_ = 0;
  std::size_t deficit_ = 0;  // Σ max(0, min_size − size) over open blocks
  bool started_ = false;
  bool done_ = false;
};

/// Number of partitions satisfying the constraints (by enumeration).
std::uint64_t count_partitions(std::size_t n, PartitionConstraints constraints = {});

struct OptimalResult {
  Clustering best;
  double best_asw = 0.0;
  /// Partitions within kTieTolerance of the maximum, including the best one.
  std::uint64_t ties = 0;
  std::uint64_t evaluated = 0;
};

/// ASW values closer than this (relative) to the incumbent count as ties.
inline constexpr double kTieTolerance = 1e-12;

/**
 * Exact ASW maximiser over all partitions with K >= 2 that meet the
 * constraints (min_k is raised to 2). The first maximiser in enumeration
 * order wins. Throws TooLarge, or InvalidArgument when no partition
 * qualifies.
 */
OptimalResult optimal_asw(const DissimilarityMatrix& delta, PartitionConstraints constraints = {2, 0, 1});

struct PerKOptimum {
  std::size_t k = 0;
  Clustering best;
  double best_asw = 0.0;
};

/// Best partition for every K in [k_min, k_max] from a single enumeration.
std::vector<PerKOptimum> best_per_k(const DissimilarityMatrix& delta, std::size_t k_min, std::size_t k_max,
                                    std::size_t min_size = 1);

}  // namespace silbound
