#pragma once

#include <vector>

#include "hurst/estimate.hpp"

namespace hurst {

/// Periodogram estimator: bins k = 2..N/2 with k/N <= cutoff, regressing
/// ln I(k) on ln 4 sin^2(f/2). H = 1/2 - slope. Requires N >= 100.
EstimateResult estimate_periodogram(const TimeSeries& x, double cutoff, Norm norm);

/// Wavelet estimator. r = 1 uses db24 and the mean of |d| per level (AWC),
/// r = 2 uses Haar and the variance of |d| (VVL). H = 1/2 + slope / r.
EstimateResult estimate_dwt(const TimeSeries& x, int r, Norm norm);

struct LwObjectiveData {
  std::vector<double> frequencies;  // j / N
  std::vector<double> power;        // |X_j|^2
};

/// Local Whittle profile objective psi(H).
double local_whittle_objective(double h, const LwObjectiveData& data);

/// Frequencies j/N and raw periodogram |X_j|^2 for j = 1..N/2.
LwObjectiveData local_whittle_data(std::span<const double> x);

/// Brent minimization of psi over [0.001, 0.999]. Requires N >= 100.
EstimateResult estimate_local_whittle(const TimeSeries& x);

}  // namespace hurst
