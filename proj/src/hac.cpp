// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "silbound/baselines.hpp"
#include "silbound/error.hpp"

namespace silbound {

std::string_view linkage_name(Linkage linkage) noexcept {
  return linkage == Linkage::Single ? "single" : "weighted";
}

Linkage parse_linkage(std::string_view name) {
  if (name == "single") return Linkage::Single;
  if (name == "weighted") return Linkage::Weighted;
  throw Error(ErrorCode::InvalidArgument, "unknown linkage '" + std::string(name) + "'");
}

Dendrogram hac(const DissimilarityMatrix& delta, Linkage linkage) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t n = delta.size();
  std::vector<double> dist(delta.values().begin(), delta.values().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return dist[i * n + j]; };

  std::vector<char> active(n, 1);
  std::vector<std::size_t> node(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(node.begin(), node.end(), std::size_t{0});

  // Cached nearest active partner with a larger slot index, ties to the
  // smallest index. Slot i represents the cluster whose smallest member is i.
  std::vector<std::size_t> nn(n, n);
  std::vector<double> nn_dist(n, inf);
  auto refresh = [&](std::size_t i) {
    nn[i] = n;
    nn_dist[i] = inf;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (active[j] && at(i, j) < nn_dist[i]) {
        nn_dist[i] = at(i, j);
        nn[i] = j;
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);

  Dendrogram dendrogram;
  dendrogram.n = n;
  dendrogram.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t a = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && nn[i] < n && (a == n || nn_dist[i] < nn_dist[a])) a = i;
    }
    const std::size_t b = nn[a];
    const double height = nn_dist[a];

    for (std::size_t c = 0; c < n; ++c) {
      if (!active[c] || c == a || c == b) continue;
      const double merged =
          linkage == Linkage::Single ? std::min(at(a, c), at(b, c)) : 0.5 * (at(a, c) + at(b, c));
      at(a, c) = merged;
      at(c, a) = merged;
    }
    active[b] = 0;
    dendrogram.merges.push_back(
        {std::min(node[a], node[b]), std::max(node[a], node[b]), height, size[a] + size[b]});
    node[a] = n + step;
    size[a] += size[b];

    refresh(a);
    for (std::size_t c = 0; c < b; ++c) {
      if (!active[c] || c == a) continue;
      if (nn[c] == a || nn[c] == b) {
        refresh(c);
      } else if (c < a && (at(c, a) < nn_dist[c] || (at(c, a) == nn_dist[c] && a < nn[c]))) {
        nn[c] = a;
        nn_dist[c] = at(c, a);
      }
    }
  }
  return dendrogram;
}

Clustering cut_dendrogram(const Dendrogram& dendrogram, std::size_t k) {
  const std::size_t n = dendrogram.n;
  if (k < 1 || k > n) {
    throw Error(ErrorCode::KOutOfRange, "cannot cut " + std::to_string(n) + " points into " + std::to_string(k) +
                                            " clusters");
  }
  // Union-find over leaves and internal nodes.
  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t t = 0; t < n - k; ++t) {
    const Merge& merge = dendrogram.merges[t];
    parent[find(merge.left)] = n + t;
    parent[find(merge.right)] = n + t;
  }
  std::vector<int> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = static_cast<int>(find(i));
  return Clustering::canonical(roots);
}

}  // namespace silbound
