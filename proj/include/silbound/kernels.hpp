// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>

/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops with a scalar reference and SIMD variants.
 *
 * Every variant exposes the same function table. The scalar table is the
 * reference implementation; vector tables are chosen at runtime by
 * active_kernels() when the CPU supports them. `min_quotient` is bit-identical
 * across variants (same per-lane IEEE operations, no contraction). The
 * reductions `squared_l2` and `dot` differ from the reference only by
 * summation order.
 */

namespace silbound::kernels {

struct QuotientMin {
  double value = 1.0;
  std::size_t lambda = 1;
};

/// Sum of squared differences of two length-m vectors.
using SquaredL2Fn = double (*)(const double* a, const double* b, std::size_t m);

/// Inner product of two length-m vectors.
using DotFn = double (*)(const double* a, const double* b, std::size_t m);

/**
 * Minimum Λ-quotient over Λ in [lo, hi] for one row.
 *
 * `prefix` has n entries, prefix[k] being the sum of the k smallest
 * off-diagonal dissimilarities of the row (prefix[0] = 0, prefix[n-1] = row
 * total). For Λ = 1 the quotient is 1; otherwise it is
 * (prefix[Λ-1] / (Λ-1)) / ((total - prefix[Λ-1]) / (n-Λ)).
 * Returns the minimum and the smallest Λ attaining it.
 * Requires 1 <= lo <= hi <= n-1.
 */
using MinQuotientFn = QuotientMin (*)(const double* prefix, std::size_t n, std::size_t lo,
                                      std::size_t hi);

struct KernelTable {
  std::string_view name;
  SquaredL2Fn squared_l2;
  DotFn dot;
  MinQuotientFn min_quotient;
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels() noexcept;

bool cpu_supports_avx2() noexcept;

/// Best variant for this CPU. Setting SILBOUND_KERNELS=scalar forces the
/// reference path.
const KernelTable& active_kernels() noexcept;

}  // namespace silbound::kernels
