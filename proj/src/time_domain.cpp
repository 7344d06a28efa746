#include "hurst/time_domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hurst/error.hpp"
#include "hurst/seqkit.hpp"

namespace hurst {

namespace {

constexpr int kMaxLag = 10;

// Relative size below which a segment statistic counts as zero.
constexpr double kNegligible = 1e-10;

void require_variation(const TimeSeries& x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) {
    throw DegenerateSequenceError("constant series has no fluctuation");
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

std::vector<double> lag_scales() {
  std::vector<double> t(kMaxLag);
  std::iota(t.begin(), t.end(), 1.0);
  return t;
}

EstimateResult make_result(Method m) {
  EstimateResult r;
  r.method = m;
  return r;
}

}  // namespace

EstimateResult estimate_central(const TimeSeries& x, int window, int order,
                                Norm norm, double alpha) {
  if (order != 1 && order != 2) throw ArgumentError("central moment order must be 1 or 2");
  auto r = make_result(order == 1 ? Method::am : Method::av);
  r.config.window = window;
  r.config.norm = norm;
  r.config.alpha = alpha;
  const auto plan = seqkit::plan_partition(static_cast<std::int64_t>(x.size()),
                                           window, alpha);
  require_variation(x);
  const auto xc = detail::centred(x);
  const double global_mean = seqkit::mean(xc);

  ScaleStatistics ss;
  for (const auto& scheme : plan.schemes()) {
    const auto m = static_cast<std::size_t>(scheme.m);
    const auto k = static_cast<std::size_t>(scheme.k);
    std::vector<double> means(k);
    for (std::size_t t = 0; t < k; ++t) {
      means[t] = seqkit::mean(std::span<const double>(xc).subspan(t * m, m));
    }
    double nu = 0.0;
    if (order == 1) {
      for (double c : means) nu += std::abs(c - global_mean);
      nu /= static_cast<double>(k);
    } else {
      const double s = seqkit::sample_std(means);
      nu = s * s;
    }
    ss.scales.push_back(static_cast<double>(m));
    ss.stats.push_back(nu);
  }
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.diagnostics.discarded_samples = static_cast<std::size_t>(plan.discarded());
  r.hurst = 1.0 + fit.slope / order;
  detail::finish(r);
  return r;
}

EstimateResult estimate_ghe(const TimeSeries& x, double q, Norm norm) {
  if (!(q > 0.0)) throw ArgumentError("GHE order q must be positive");
  if (x.size() <= 20) {
    throw InsufficientDataError("GHE needs more than 20 samples, got " +
                                std::to_string(x.size()));
  }
  auto r = make_result(Method::ghe);
  r.config.q_order = q;
  r.config.norm = norm;
  require_variation(x);
  const auto y = seqkit::cumulative_bias(detail::centred(x));
  const std::size_t n = y.size();

  ScaleStatistics ss;
  ss.scales = lag_scales();
  bool drifting = true;
  for (int tau = 1; tau <= kMaxLag; ++tau) {
    const auto lag = static_cast<std::size_t>(tau);
    double acc = 0.0;
    double lo = y[lag] - y[0], hi = lo, mag = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) {
      const double inc = y[i + lag] - y[i];
      acc += std::pow(std::abs(inc), q);
      lo = std::min(lo, inc);
      hi = std::max(hi, inc);
      mag = std::max(mag, std::abs(inc));
    }
    if (hi - lo > kNegligible * mag) drifting = false;
    ss.stats.push_back(acc / static_cast<double>(n - lag));
  }
  // Identical increments at every lag: the profile is a straight line.
  if (drifting) {
    throw DegenerateSequenceError("cumulative profile is linear; no fluctuation");
  }
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.hurst = fit.slope / q;
  detail::finish(r);
  return r;
}

std::vector<double> higuchi_lags() {
  std::vector<double> lags;
  for (int idx = 1; idx <= kMaxLag; ++idx) {
    const int m = idx <= 4 ? idx
                           : static_cast<int>(std::floor(std::pow(2.0, (idx + 5) / 4.0)));
    lags.push_back(m);
  }
  return lags;
}

EstimateResult estimate_higuchi(const TimeSeries& x, Norm norm) {
  if (x.size() <= 64) {
    throw InsufficientDataError("Higuchi needs more than 64 samples, got " +
                                std::to_string(x.size()));
  }
  auto r = make_result(Method::hm);
  r.config.norm = norm;
  require_variation(x);
  const auto y = seqkit::cumulative_bias(detail::centred(x));
  const std::size_t n = y.size();

  ScaleStatistics ss;
  for (double lag : higuchi_lags()) {
    const auto m = static_cast<std::size_t>(lag);
    const std::size_t k = n / m;
    const std::size_t count = (k - 1) * m;
    double acc = 0.0;
    for (std::size_t j = 0; j < count; ++j) acc += std::abs(y[j + m] - y[j]);
    const double length = acc / static_cast<double>(count);
    ss.scales.push_back(lag);
    ss.stats.push_back(static_cast<double>(n - 1) * length / (lag * lag));
  }
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.hurst = 2.0 + fit.slope;
  detail::finish(r);
  return r;
}

EstimateResult estimate_dfa(const TimeSeries& x, int window, Norm norm,
                            double alpha) {
  auto r = make_result(Method::dfa);
  r.config.window = window;
  r.config.norm = norm;
  r.config.alpha = alpha;
  const auto plan = seqkit::plan_partition(static_cast<std::int64_t>(x.size()),
                                           window, alpha);
  require_variation(x);
  const auto xc = detail::centred(x);
  const auto n_opt = static_cast<std::size_t>(plan.n_opt);
  const auto z = seqkit::cumulative_bias(std::span<const double>(xc).first(n_opt));
  const double floor_std = kNegligible * max_abs(z);

  ScaleStatistics ss;
  for (const auto& scheme : plan.schemes()) {
    const auto m = static_cast<std::size_t>(scheme.m);
    const auto k = static_cast<std::size_t>(scheme.k);
    std::vector<double> pos(m);
    std::iota(pos.begin(), pos.end(), 1.0);
    std::vector<double> resid(m);
    double total = 0.0;
    std::size_t kept = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const auto seg = std::span<const double>(z).subspan(t * m, m);
      const auto trend = numerics::fit_line(pos, seg, norm);
      for (std::size_t i = 0; i < m; ++i) {
        resid[i] = seg[i] - trend.intercept - trend.slope * pos[i];
      }
      const double s = seqkit::sample_std(resid);
      if (s <= floor_std) {
        ++r.diagnostics.excluded_segments;
        continue;
      }
      total += s;
      ++kept;
    }
    if (kept == 0) {
      throw DegenerateSequenceError("every DFA window of size " +
                                    std::to_string(m) +
                                    " has zero residual deviation");
    }
    ss.scales.push_back(static_cast<double>(m));
    ss.stats.push_back(total / static_cast<double>(kept));
  }
  const std::size_t excluded = r.diagnostics.excluded_segments;
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.diagnostics.excluded_segments = excluded;
  r.diagnostics.discarded_samples = static_cast<std::size_t>(plan.discarded());
  r.hurst = fit.slope;
  detail::finish(r);
  return r;
}

double expected_rs(int m) {
  if (m < 2) throw ArgumentError("expected R/S needs m >= 2");
  const double md = m;
  double tail = 0.0;
  for (int i = 1; i < m; ++i) tail += std::sqrt((md - i) / i);
  const double lead = (md - 0.5) / md;
  double ratio = 0.0;
  if (m <= 340) {
    // Gamma((m-1)/2) / (sqrt(pi) Gamma(m/2)) via g(m+2) = g(m) (m-1)/m,
    // starting from g(2) = 1 and g(3) = 2/pi. No overflow, exact at m = 2.
    int j = 2 + m % 2;
    ratio = j == 2 ? 1.0 : 2.0 / std::numbers::pi;
    for (; j < m; j += 2) ratio *= (j - 1.0) / j;
  } else {
    ratio = std::sqrt(2.0 / (std::numbers::pi * md));
  }
  return lead * ratio * tail;
}

EstimateResult estimate_rs(const TimeSeries& x, int window, Norm norm,
                           bool corrected, double alpha) {
  auto r = make_result(Method::rs);
  r.config.window = window;
  r.config.norm = norm;
  r.config.rs_corrected = corrected;
  r.config.alpha = alpha;
  const auto plan = seqkit::plan_partition(static_cast<std::int64_t>(x.size()),
                                           window, alpha);
  require_variation(x);
  const auto xc = detail::centred(x);
  const double floor_std = kNegligible * max_abs(xc);

  ScaleStatistics ss;
  std::vector<double> bias, profile;
  for (const auto& scheme : plan.schemes()) {
    const auto m = static_cast<std::size_t>(scheme.m);
    const auto k = static_cast<std::size_t>(scheme.k);
    double total = 0.0;
    std::size_t kept = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const auto seg = std::span<const double>(xc).subspan(t * m, m);
      const double local_mean = seqkit::mean(seg);
      bias.resize(m);
      for (std::size_t j = 0; j < m; ++j) bias[j] = seg[j] - local_mean;
      profile = seqkit::cumsum(bias);
      const auto [lo, hi] = std::minmax_element(profile.begin(), profile.end());
      const double s = seqkit::sample_std(bias);
      if (s <= floor_std) {
        ++r.diagnostics.excluded_segments;
        continue;
      }
      total += (*hi - *lo) / s;
      ++kept;
    }
    if (kept == 0) {
      throw DegenerateSequenceError("every R/S segment of size " +
                                    std::to_string(m) +
                                    " has zero standard deviation");
    }
    double stat = total / static_cast<double>(kept);
    if (corrected) {
      stat = stat - expected_rs(static_cast<int>(m)) +
             std::sqrt(std::numbers::pi * static_cast<double>(m) / 2.0);
    }
    ss.scales.push_back(static_cast<double>(m));
    ss.stats.push_back(stat);
  }
  const std::size_t excluded = r.diagnostics.excluded_segments;
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.diagnostics.excluded_segments = excluded;
  r.diagnostics.discarded_samples = static_cast<std::size_t>(plan.discarded());
  r.hurst = fit.slope;
  detail::finish(r);
  return r;
}

EstimateResult estimate_tta(const TimeSeries& x, Norm norm) {
  if (x.size() < 41) {
    throw InsufficientDataError("TTA needs at least 41 samples, got " +
                                std::to_string(x.size()));
  }
  auto r = make_result(Method::tta);
  r.config.norm = norm;
  require_variation(x);
  const auto y = seqkit::cumulative_bias(detail::centred(x));
  const std::size_t n = y.size();
  const double scale = max_abs(y);

  ScaleStatistics ss;
  ss.scales = lag_scales();
  for (int tau = 1; tau <= kMaxLag; ++tau) {
    const auto lag = static_cast<std::size_t>(tau);
    const std::size_t count = (n - 1) / (2 * lag);
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = 2 * i * lag;
      acc += std::abs(y[j + 2 * lag] - 2.0 * y[j + lag] + y[j]);
    }
    if (acc <= kNegligible * scale * static_cast<double>(count)) {
      throw DegenerateSequenceError("all triangles collinear at lag " +
                                    std::to_string(tau));
    }
    ss.stats.push_back(tau * acc / 2.0);
  }
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.hurst = fit.slope;
  detail::finish(r);
  return r;
}

}  // namespace hurst
