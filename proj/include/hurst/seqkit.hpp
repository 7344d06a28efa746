#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurst/time_series.hpp"

namespace hurst::seqkit {

/// Neumaier-compensated sum.
double sum(std::span<const double> x);
double mean(std::span<const double> x);

/// Running sum; the last entry equals the total.
std::vector<double> cumsum(std::span<const double> x);

/// Running sum of deviations from the global mean. Ends at zero up to
/// rounding.
std::vector<double> cumulative_bias(std::span<const double> x);

/// Unbiased (n-1 divisor) standard deviation. Requires at least two values.
double sample_std(std::span<const double> x);

/// Divisors d of `a` with w <= d <= floor(a / w), ascending.
/// Requires a >= 4 and 2 <= w <= floor(sqrt(a)).
std::vector<std::int64_t> gen_sbpf(std::int64_t a, std::int64_t w);

/// Length in [ceil(alpha N), N] with the most bounded proper factors for
/// window `w`. Ties go to the largest length. Throws NoPartitionError when
/// every candidate has an empty factor set.
std::int64_t search_opt_seq_len(std::int64_t n, std::int64_t w,
                                double alpha = 0.99);

/// Equal-size split into k segments of m samples; the remainder past m*k
/// is dropped.
std::vector<std::vector<double>> seq_partition(std::span<const double> x,
                                               std::int64_t m, std::int64_t k);

/// One admissible (m, k) split of the optimal-length prefix.
struct PartitionScheme {
  std::int64_t n_opt;
  std::int64_t m;
  std::int64_t k;
  std::int64_t w;
};

/// All admissible segment sizes for a series of length `n` and window `w`.
struct PartitionPlan {
  std::int64_t n;
  std::int64_t n_opt;
  std::int64_t w;
  std::vector<std::int64_t> sizes;

  std::vector<PartitionScheme> schemes() const;
  std::int64_t discarded() const noexcept { return n - n_opt; }
};

/// Throws InsufficientDataError when n < w^2, ArgumentError when w < 2.
PartitionPlan plan_partition(std::int64_t n, std::int64_t w,
                             double alpha = 0.99);

}  // namespace hurst::seqkit
