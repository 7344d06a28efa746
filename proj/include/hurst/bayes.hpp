#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurst/estimate.hpp"

namespace hurst {

/// Unbiased std of the floor(N/m) non-overlapping block sums of size m.
/// ArgumentError when fewer than two blocks fit.
double block_sum_std(std::span<const double> x, std::int64_t m);

/// Read-only inputs shared by the LSSD map and the LSV objective.
struct BlockScaleContext {
  double n = 0.0;  // series length N
  double p = 6.0;  // scale weight exponent
  double q = 50.0; // penalty exponent
  std::vector<double> scales;
  std::vector<double> stats;
};

/// Block-sum deviations for m = 1..floor(N/10). Scales whose deviation is
/// zero are dropped; fewer than two survivors is a degenerate sequence.
BlockScaleContext block_scale_context(std::span<const double> x, double p,
                                      double q);

double lssd_cm(double m, double n, double h);
double lssd_dm(double m, double n, double h);

/// Contractive map whose fixed point is the LSSD estimate.
double lssd_map(double h, const BlockScaleContext& ctx);

EstimateResult estimate_lssd(const TimeSeries& x, double p, double q, double eps);

double lsv_cm(double m, double n, double h);

/// Profiled fitting error minimized by the LSV estimate.
double lsv_objective(double h, const BlockScaleContext& ctx);

EstimateResult estimate_lsv(const TimeSeries& x, double p, double q, double eps);

}  // namespace hurst
