#pragma once

#include "hurst/estimate.hpp"

namespace hurst {

/// Central-moment estimator over the optimal partition. order 1 is the
/// absolute-moment (AM) variant, order 2 the aggregate-variance (AV) one.
/// H = 1 + slope / order.
EstimateResult estimate_central(const TimeSeries& x, int window, int order,
                                Norm norm, double alpha = 0.99);

/// Generalized Hurst exponent of order q on the cumulative-bias profile,
/// lags 1..10. H = slope / q.
EstimateResult estimate_ghe(const TimeSeries& x, double q, Norm norm);

/// Lag schedule used by the Higuchi estimator: 1,2,3,4,5,6,8,9,11,13.
std::vector<double> higuchi_lags();

/// Higuchi curve-length estimator, H = 2 + slope. Requires N > 64.
EstimateResult estimate_higuchi(const TimeSeries& x, Norm norm);

/// Detrended fluctuation analysis over the optimal partition.
EstimateResult estimate_dfa(const TimeSeries& x, int window, Norm norm,
                            double alpha = 0.99);

/// Small-sample expectation of R/S for white noise of length m >= 2.
double expected_rs(int m);

/// Rescaled-range estimator; `corrected` applies the small-sample
/// adjustment to every averaged statistic before the fit.
EstimateResult estimate_rs(const TimeSeries& x, int window, Norm norm,
                           bool corrected, double alpha = 0.99);

/// Triangle total-area estimator over lags 1..10. Requires N >= 41.
EstimateResult estimate_tta(const TimeSeries& x, Norm norm);

}  // namespace hurst
