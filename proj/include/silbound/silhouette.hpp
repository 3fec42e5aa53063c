// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "silbound/matrix.hpp"
#include "silbound/numeric.hpp"

namespace silbound {

/**
 * Assignment of n points to K non-empty clusters, identifiers 1..K.
 */
class Clustering {
 public:
  /// K is the largest label. Throws LabelOutOfRange for labels < 1 and
  /// EmptyCluster when some identifier in 1..K is unused.
  explicit Clustering(std::vector<int> labels);

  /// Labels must lie in 1..k. Same errors as above.
  Clustering(std::vector<int> labels, int k);

  /// Relabels arbitrary integer identifiers to 1..K in order of first
  /// appearance.
  static Clustering canonical(std::span<const int> raw);

  /// Builds from 0-based cluster indices (restricted-growth strings, internal
  /// assignments).
  static Clustering from_assignment(std::span<const std::size_t> assignment);

  std::size_t size() const noexcept { return labels_.size(); }
  int k() const noexcept { return k_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int label(std::size_t i) const noexcept { return labels_[i]; }

  /// 0-based cluster index of point i.
  std::size_t cluster_of(std::size_t i) const noexcept {
    return static_cast<std::size_t>(labels_[i] - 1);
  }

  std::vector<std::size_t> cluster_sizes() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<int> labels_;
  int k_ = 0;
};

struct SilhouetteReport {
  /// Mean dissimilarity to the other members of the point's cluster; empty
  /// for singletons, where it is not defined.
  std::vector<std::optional<double>> a;
  /// Smallest mean dissimilarity to a rival cluster.
  std::vector<double> b;
  std::vector<double> s;
  double asw = 0.0;
};

/**
 * Per-point silhouette widths.
 *
 * s(i) = (b − a)/max(a, b), with s = 0 for singletons and when a == b exactly.
 * Errors: SizeMismatch, SingleCluster (K < 2).
 */
SilhouetteReport silhouette_report(const DissimilarityMatrix& delta, const Clustering& clustering,
                                   unsigned workers = 0);

/// Average silhouette width, single pass without per-point arrays.
double asw(const DissimilarityMatrix& delta, const Clustering& clustering);

/**
 * Low-level variants over 0-based assignments with values in [0, k), used by
 * the enumeration oracle and the local searches. `scratch` must hold at least
 * k accumulators; `widths`, when non-empty, receives s(i) for every point.
 * No validation: every cluster in [0, k) must be non-empty and k >= 2.
 */
double asw_of_assignment(const DissimilarityMatrix& delta, std::span<const std::size_t> assignment,
                         std::size_t k, std::span<const std::size_t> sizes, std::span<CompensatedSum> scratch,
                         std::span<double> widths = {});

}  // namespace silbound
