// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "silbound/matrix.hpp"
#include "silbound/silhouette.hpp"

/**
 * @file baselines.hpp
 * @brief Clustering algorithms used to produce candidate K-clusterings:
 * Lloyd k-means, an ASW-maximising medoid swap search, single and weighted
 * (WPGMA) agglomerative clustering, and a Gaussian blob generator.
 *
 * All of them are deterministic for a given seed and return canonical labels
 * (1..K in order of first appearance).
 */

namespace silbound {

// k-means ------------------------------------------------------------------

struct KMeansConfig {
  std::size_t k = 2;
  std::size_t max_iter = 300;
  std::size_t n_init = 10;
  std::uint64_t seed = 0;
};

struct KMeansResult {
  Clustering clustering;
  /// Within-cluster sum of squares of the returned clustering.
  double inertia = 0.0;
  std::size_t iterations = 0;
  /// k×m row-major centroids, indexed by label − 1.
  std::vector<double> centers;
  /// Inertia after each assignment step of the winning restart.
  std::vector<double> inertia_trace;
};

/**
 * Lloyd iterations from k-means++ seeds; the restart with the lowest inertia
 * wins. A cluster that empties is reseeded with the point farthest from its
 * centroid. Errors: KOutOfRange (k < 2 or max_iter/n_init = 0), KTooLarge (k > n).
 */
KMeansResult kmeans(const PointSet& points, const KMeansConfig& config);

// k-medoids with an ASW objective -----------------------------------------

struct KMedoidsResult {
  Clustering clustering;
  /// Medoid point indices, indexed by label − 1.
  std::vector<std::size_t> medoids;
  double asw = 0.0;
  /// ASW of the BUILD initialisation.
  double initial_asw = 0.0;
  std::size_t swaps = 0;
};

/**
 * Greedy BUILD initialisation followed by first-improvement medoid/non-medoid
 * swaps, accepting a swap only when the exact ASW of the nearest-medoid
 * assignment strictly increases. The seed shuffles the order in which swap
 * candidates are tried. Errors: KOutOfRange (k < 2), KTooLarge (k > n).
 */
KMedoidsResult kmedoids_asw(const DissimilarityMatrix& delta, std::size_t k, std::uint64_t seed = 0);

// agglomerative clustering -------------------------------------------------

enum class Linkage { Single, Weighted };

std::string_view linkage_name(Linkage linkage) noexcept;
Linkage parse_linkage(std::string_view name);

struct Merge {
  /// Node ids: 0..n−1 are points, n+t is the cluster created by merge t.
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t size = 0;
};

/// n−1 merges in the order performed. Weighted linkage may produce
/// non-monotone heights.
struct Dendrogram {
  std::size_t n = 0;
  std::vector<Merge> merges;
};

/**
 * Lance–Williams agglomeration. single: D(A∪B, C) = min(D(A,C), D(B,C));
 * weighted: D(A∪B, C) = (D(A,C) + D(B,C))/2. The closest pair is merged, ties
 * going to the smallest (i, j) by lowest member index.
 */
Dendrogram hac(const DissimilarityMatrix& delta, Linkage linkage);

/// Clusters left after replaying the first n−k merges. Throws KOutOfRange
/// unless 1 <= k <= n.
Clustering cut_dendrogram(const Dendrogram& dendrogram, std::size_t k);

// synthetic data ------------------------------------------------------------

/// Generator parameters, written "n_samples-n_features-centers-cluster_std".
struct BlobSpec {
  std::size_t n_samples = 0;
  std::size_t n_features = 0;
  std::size_t centers = 0;
  double cluster_std = 1.0;

  /// Throws ParseError for malformed tags, InvalidArgument for non-positive values.
  static BlobSpec parse(std::string_view tag);
  std::string tag() const;
};

/// Side length of the axis-aligned box (centred at the origin) that blob
/// centres are drawn from.
inline constexpr double kBlobBoxSide = 20.0;

struct BlobData {
  PointSet points;
  /// Ground-truth blob of each point, 1..centers.
  std::vector<int> labels;
  /// centers×n_features row-major.
  std::vector<double> centers;
};

/// Isotropic Gaussian blobs around uniformly drawn centres; sample counts are
/// split as evenly as possible, earlier blobs taking the remainder.
BlobData make_blobs(const BlobSpec& spec, std::uint64_t seed);

}  // namespace silbound
