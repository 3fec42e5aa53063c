// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "silbound/baselines.hpp"
#include "silbound/error.hpp"

namespace silbound {

namespace {

// Greedy BUILD: the most central point first, then whichever point most
// reduces the total distance to the nearest medoid.
std::vector<std::size_t> build_medoids(const DissimilarityMatrix& delta, std::size_t k) {
  const std::size_t n = delta.size();
  std::vector<std::size_t> medoids;
  std::vector<char> is_medoid(n, 0);

  std::size_t first = 0;
  double best_total = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = delta.row(i);
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    if (total < best_total) {
      best_total = total;
      first = i;
    }
  }
  medoids.push_back(first);
  is_medoid[first] = 1;
  std::vector<double> nearest(delta.row(first).begin(), delta.row(first).end());

  while (medoids.size() < k) {
    std::size_t pick = n;
    double best_gain = -1.0;
    for (std::size_t h = 0; h < n; ++h) {
      if (is_medoid[h]) continue;
      double gain = 0.0;
      for (std::size_t j = 0; j < n; ++j) gain += std::max(0.0, nearest[j] - delta(j, h));
      if (gain > best_gain) {
        best_gain = gain;
        pick = h;
      }
    }
    medoids.push_back(pick);
    is_medoid[pick] = 1;
    for (std::size_t j = 0; j < n; ++j) nearest[j] = std::min(nearest[j], delta(j, pick));
  }
  return medoids;
}

// Nearest-medoid assignment; medoids always own their slot so no cluster is
// empty even when points coincide.
void assign(const DissimilarityMatrix& delta, const std::vector<std::size_t>& medoids,
            std::vector<std::size_t>& assignment, std::vector<std::size_t>& sizes) {
  const std::size_t n = delta.size();
  std::fill(sizes.begin(), sizes.end(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t slot = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < medoids.size(); ++s) {
      if (medoids[s] == j) {
        slot = s;
        break;
      }
      const double d = delta(j, medoids[s]);
      if (d < best) {
        best = d;
        slot = s;
      }
    }
    assignment[j] = slot;
    ++sizes[slot];
  }
}

}  // namespace

KMedoidsResult kmedoids_asw(const DissimilarityMatrix& delta, std::size_t k, std::uint64_t seed) {
  const std::size_t n = delta.size();
  if (k < 2) throw Error(ErrorCode::KOutOfRange, "k-medoids needs k >= 2");
  if (k > n) throw Error(ErrorCode::KTooLarge, "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));

  std::vector<std::size_t> medoids = build_medoids(delta, k);
  std::vector<std::size_t> assignment(n);
  std::vector<std::size_t> sizes(k);
  std::vector<CompensatedSum> scratch(k);
  assign(delta, medoids, assignment, sizes);
  double current = asw_of_assignment(delta, assignment, k, sizes, scratch);
  const double initial = current;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> candidates;
  std::vector<std::size_t> trial_assignment(n);
  std::vector<std::size_t> trial_sizes(k);
  std::size_t swaps = 0;

  bool improved = true;
  while (improved) {
    improved = false;
    candidates.clear();
    for (std::size_t h = 0; h < n; ++h) {
      if (std::find(medoids.begin(), medoids.end(), h) == medoids.end()) candidates.push_back(h);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);

    for (std::size_t slot = 0; slot < k && !improved; ++slot) {
      for (const std::size_t h : candidates) {
        const std::size_t previous = medoids[slot];
        medoids[slot] = h;
        assign(delta, medoids, trial_assignment, trial_sizes);
        const double value = asw_of_assignment(delta, trial_assignment, k, trial_sizes, scratch);
        if (value > current) {
          current = value;
          assignment.swap(trial_assignment);
          sizes.swap(trial_sizes);
          ++swaps;
          improved = true;
          break;
        }
        medoids[slot] = previous;
      }
    }
  }

  std::vector<int> labels(n);
  for (std::size_t j = 0; j < n; ++j) labels[j] = static_cast<int>(assignment[j]) + 1;
  Clustering clustering = Clustering::canonical(labels);
  // Reorder medoids so medoids[label − 1] is the medoid of that label.
  std::vector<std::size_t> ordered(k);
  for (std::size_t s = 0; s < k; ++s) ordered[clustering.cluster_of(medoids[s])] = medoids[s];
  return KMedoidsResult{std::move(clustering), std::move(ordered), current, initial, swaps};
}

}  // namespace silbound
