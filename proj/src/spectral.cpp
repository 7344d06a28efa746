#include "hurst/spectral.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "hurst/error.hpp"
#include "hurst/seqkit.hpp"
#include "hurst/transforms.hpp"

namespace hurst {

namespace {

constexpr double kLwLower = 0.001;
constexpr double kLwUpper = 0.999;
constexpr double kLwTol = 1e-8;

void require_length(const TimeSeries& x, std::size_t min, const char* who) {
  if (x.size() < min) {
    throw InsufficientDataError(std::string(who) + " needs at least " +
                                std::to_string(min) + " samples, got " +
                                std::to_string(x.size()));
  }
}

}  // namespace

EstimateResult estimate_periodogram(const TimeSeries& x, double cutoff, Norm norm) {
  if (!(cutoff > 0.0 && cutoff <= 0.5)) {
    throw ArgumentError("periodogram cutoff must lie in (0, 0.5]");
  }
  require_length(x, 100, "periodogram");
  EstimateResult r;
  r.method = Method::pm;
  r.config.cutoff = cutoff;
  r.config.norm = norm;

  const auto spec = transforms::dft(detail::centred(x));
  const std::size_t n = x.size();
  const double nd = static_cast<double>(n);
  ScaleStatistics ss;
  for (std::size_t k = 2; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) / nd;
    if (f > cutoff) break;
    const double s = std::sin(f / 2.0);
    ss.scales.push_back(4.0 * s * s);
    ss.stats.push_back(std::norm(spec[k]) / nd);
  }
  if (ss.scales.size() < 2) {
    throw ArgumentError("cutoff " + std::to_string(cutoff) +
                        " leaves fewer than 2 periodogram bins");
  }
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.hurst = 0.5 - fit.slope;
  detail::finish(r);
  return r;
}

EstimateResult estimate_dwt(const TimeSeries& x, int order, Norm norm) {
  if (order != 1 && order != 2) throw ArgumentError("wavelet order must be 1 or 2");
  require_length(x, 64, order == 1 ? "AWC" : "VVL");
  EstimateResult r;
  r.method = order == 1 ? Method::awc : Method::vvl;
  r.config.norm = norm;

  const auto xc = detail::centred(x);
  const int levels = std::bit_width(x.size()) - 1;
  const auto wavelet = order == 1 ? transforms::Wavelet::db24 : transforms::Wavelet::haar;
  const auto dec = transforms::wavedec(xc, wavelet, levels);

  ScaleStatistics ss;
  std::vector<double> mag;
  for (int j = 1; j <= dec.levels(); ++j) {
    const auto& d = dec.details[static_cast<std::size_t>(j - 1)];
    if (d.size() < 2) {
      ++r.diagnostics.excluded_segments;
      continue;
    }
    mag.resize(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) mag[i] = std::abs(d[i]);
    double stat = 0.0;
    if (order == 1) {
      stat = seqkit::mean(mag);
    } else {
      const double s = seqkit::sample_std(mag);
      stat = s * s;
    }
    // A zero statistic has no logarithm; treat the level as unusable.
    if (!(stat > 0.0)) {
      ++r.diagnostics.excluded_segments;
      continue;
    }
    ss.scales.push_back(std::ldexp(1.0, j));
    ss.stats.push_back(stat);
  }
  if (ss.scales.size() < 2) {
    throw InsufficientDataError("fewer than 2 usable wavelet levels");
  }
  const std::size_t excluded = r.diagnostics.excluded_segments;
  const auto fit = detail::fit_scaling(ss, norm, r.diagnostics);
  r.diagnostics.excluded_segments = excluded;
  r.hurst = 0.5 + fit.slope / order;
  detail::finish(r);
  return r;
}

double local_whittle_objective(double h, const LwObjectiveData& data) {
  const auto& lam = data.frequencies;
  const auto& pw = data.power;
  if (lam.empty() || lam.size() != pw.size()) {
    throw ArgumentError("Whittle data must be non-empty with equal lengths");
  }
  const double e = 2.0 * h - 1.0;
  const double n = static_cast<double>(lam.size());
  double weighted = 0.0, logs = 0.0;
  bool any = false;
  for (std::size_t j = 0; j < lam.size(); ++j) {
    if (pw[j] > 0.0) any = true;
    weighted += std::pow(lam[j], e) * pw[j];
    logs += std::log(lam[j]);
  }
  if (!any) throw DegenerateSequenceError("periodogram is identically zero");
  return std::log(weighted / n) - e * logs / n;
}

LwObjectiveData local_whittle_data(std::span<const double> x) {
  const auto spec = transforms::dft(x);
  const std::size_t n = x.size();
  LwObjectiveData data;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    data.frequencies.push_back(static_cast<double>(j) / static_cast<double>(n));
    data.power.push_back(std::norm(spec[j]));
  }
  return data;
}

EstimateResult estimate_local_whittle(const TimeSeries& x) {
  require_length(x, 100, "local Whittle");
  EstimateResult r;
  r.method = Method::lw;
  const auto data = local_whittle_data(detail::centred(x));
  // Surface a degenerate periodogram before the solver starts.
  local_whittle_objective(0.5, data);
  r.hurst = numerics::loc_min_solve(
      [&](double h) { return local_whittle_objective(h, data); }, kLwLower,
      kLwUpper, kLwTol);
  r.diagnostics.regression_points = data.frequencies.size();
  detail::finish(r);
  return r;
}

}  // namespace hurst
