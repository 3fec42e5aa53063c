// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "silbound/baselines.hpp"
#include "silbound/error.hpp"
#include "silbound/kernels.hpp"

namespace silbound {

namespace {

struct Run {
  std::vector<std::size_t> assignment;
  std::vector<double> centers;
  std::vector<double> trace;
  double inertia = 0.0;
  std::size_t iterations = 0;
};

std::vector<double> plus_plus_seeds(const PointSet& points, std::size_t k, std::mt19937_64& rng) {
  const std::size_t n = points.size();
  const std::size_t m = points.dimension();
  const auto& kern = kernels::active_kernels();

  std::vector<double> centers(k * m);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<char> chosen(n, 0);
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  for (std::size_t c = 0; c < k; ++c) {
    if (c > 0) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) total += chosen[i] ? 0.0 : nearest[i];
      if (total > 0.0) {
        const double target = std::uniform_real_distribution<double>(0.0, total)(rng);
        double running = 0.0;
        pick = n;
        for (std::size_t i = 0; i < n; ++i) {
          if (chosen[i]) continue;
          running += nearest[i];
          pick = i;
          if (running > target) break;
        }
      } else {
        // every remaining point coincides with a centre
        pick = static_cast<std::size_t>(std::find(chosen.begin(), chosen.end(), 0) - chosen.begin());
      }
    }
    chosen[pick] = 1;
    const auto p = points.point(pick);
    std::copy(p.begin(), p.end(), centers.begin() + static_cast<std::ptrdiff_t>(c * m));
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], kern.squared_l2(points.point(i).data(), p.data(), m));
    }
  }
  return centers;
}

void recompute_centers(const PointSet& points, const std::vector<std::size_t>& assignment, std::size_t k,
                       std::vector<double>& centers) {
  const std::size_t m = points.dimension();
  std::vector<std::size_t> counts(k, 0);
  std::fill(centers.begin(), centers.end(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    double* c = centers.data() + assignment[i] * m;
    for (std::size_t d = 0; d < m; ++d) c[d] += p[d];
    ++counts[assignment[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < m; ++d) centers[c * m + d] /= static_cast<double>(counts[c]);
  }
}

Run lloyd(const PointSet& points, std::size_t k, std::size_t max_iter, std::mt19937_64& rng) {
  const std::size_t n = points.size();
  const std::size_t m = points.dimension();
  const auto& kern = kernels::active_kernels();

  Run run;
  run.centers = plus_plus_seeds(points, k, rng);
  run.assignment.assign(n, k);  // k marks "unassigned"
  std::vector<double> dist(n);

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = kern.squared_l2(points.point(i).data(), run.centers.data() + c * m, m);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      changed = changed || best != run.assignment[i];
      run.assignment[i] = best;
      dist[i] = best_d;
      inertia += best_d;
    }

    // Reseed empty clusters with the point farthest from its centre, taken
    // from a cluster that can spare it.
    std::vector<std::size_t> counts(k, 0);
    for (const std::size_t c : run.assignment) ++counts[c];
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[run.assignment[i]] > 1 && (far == n || dist[i] > dist[far])) far = i;
      }
      --counts[run.assignment[far]];
      run.assignment[far] = c;
      ++counts[c];
      inertia -= dist[far];
      dist[far] = 0.0;
      changed = true;
    }

    run.trace.push_back(inertia);
    run.iterations = iter + 1;
    if (!changed) break;
    recompute_centers(points, run.assignment, k, run.centers);
  }

  recompute_centers(points, run.assignment, k, run.centers);
  run.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    run.inertia += kern.squared_l2(points.point(i).data(), run.centers.data() + run.assignment[i] * m, m);
  }
  return run;
}

}  // namespace

KMeansResult kmeans(const PointSet& points, const KMeansConfig& config) {
  const std::size_t n = points.size();
  const std::size_t m = points.dimension();
  if (config.k < 2 || config.max_iter < 1 || config.n_init < 1) {
    throw Error(ErrorCode::KOutOfRange, "k-means needs k >= 2, max_iter >= 1 and n_init >= 1");
  }
  if (config.k > n) {
    throw Error(ErrorCode::KTooLarge, "k = " + std::to_string(config.k) + " exceeds n = " + std::to_string(n));
  }

  std::mt19937_64 rng(config.seed);
  Run best;
  bool have_best = false;
  for (std::size_t restart = 0; restart < config.n_init; ++restart) {
    Run run = lloyd(points, config.k, config.max_iter, rng);
    if (!have_best || run.inertia < best.inertia) {
      best = std::move(run);
      have_best = true;
    }
  }

  // Relabel clusters in order of first appearance and permute centres to match.
  std::vector<std::size_t> relabel(config.k, config.k);
  std::size_t next = 0;
  for (const std::size_t c : best.assignment) {
    if (relabel[c] == config.k) relabel[c] = next++;
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t i = 0; i < n; ++i) assignment[i] = relabel[best.assignment[i]];
  std::vector<double> centers(config.k * m);
  for (std::size_t c = 0; c < config.k; ++c) {
    std::copy_n(best.centers.begin() + static_cast<std::ptrdiff_t>(c * m), m,
                centers.begin() + static_cast<std::ptrdiff_t>(relabel[c] * m));
  }

  return KMeansResult{Clustering::from_assignment(assignment), best.inertia, best.iterations,
                      std::move(centers), std::move(best.trace)};
}

}  // namespace silbound
