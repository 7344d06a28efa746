#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "hurst/numerics.hpp"
#include "hurst/time_series.hpp"

namespace hurst {

enum class Method { am, av, ghe, hm, dfa, rs, tta, pm, awc, vvl, lw, lssd, lsv };

inline constexpr std::array<Method, 13> kAllMethods = {
    Method::am,  Method::av,  Method::ghe, Method::hm,  Method::dfa,
    Method::rs,  Method::tta, Method::pm,  Method::awc, Method::vvl,
    Method::lw,  Method::lssd, Method::lsv};

std::string_view method_name(Method m);

/// ArgumentError for an unknown tag.
Method parse_method(std::string_view tag);

/// Every tunable knob of the thirteen estimators, with the toolkit defaults.
struct EstimatorConfig {
  int window = 50;            // lower bound w on segment size
  Norm norm = Norm::l2;       // regression norm
  double q_order = 1.0;       // GHE moment order
  double cutoff = 0.1;        // periodogram frequency cutoff
  double weight_p = 6.0;      // LSSD/LSV scale weight exponent
  double penalty_q = 50.0;    // LSSD/LSV penalty exponent
  double epsilon = 1e-4;      // LSSD/LSV solver tolerance
  bool rs_corrected = false;  // small-sample R/S correction
  double alpha = 0.99;        // optimal-length search fraction
};

struct Diagnostics {
  double residual_norm = 0.0;
  std::size_t regression_points = 0;
  std::size_t excluded_segments = 0;
  std::size_t discarded_samples = 0;
  /// Set when the estimate falls outside (0, 1); the value is still returned.
  bool out_of_range = false;
};

struct EstimateResult {
  Method method = Method::am;
  double hurst = 0.0;
  EstimatorConfig config;
  Diagnostics diagnostics;
};

/// Paired (scale, statistic) vectors feeding a log-log regression.
struct ScaleStatistics {
  std::vector<double> scales;
  std::vector<double> stats;
};

/// Runs the estimator named by `method` with the knobs from `config`.
EstimateResult estimate(const TimeSeries& x, Method method,
                        const EstimatorConfig& config = {});

namespace detail {

/// Log-log fit of `ss`. A zero statistic is reported as a
/// DegenerateSequenceError instead of a raw domain error.
numerics::RegressionFit fit_scaling(const ScaleStatistics& ss, Norm norm,
                                    Diagnostics& diag);

/// Mean-removed copy of the series. Every estimator starts from this, which
/// makes the shift invariance hold exactly whenever the centring is exact.
std::vector<double> centred(const TimeSeries& x);

void finish(EstimateResult& r);

}  // namespace detail
}  // namespace hurst
