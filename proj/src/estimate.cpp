#include "hurst/estimate.hpp"

#include <cmath>
#include <string>

#include "hurst/bayes.hpp"
#include "hurst/error.hpp"
#include "hurst/seqkit.hpp"
#include "hurst/spectral.hpp"
#include "hurst/time_domain.hpp"

namespace hurst {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::am: return "am";
    case Method::av: return "av";
    case Method::ghe: return "ghe";
    case Method::hm: return "hm";
    case Method::dfa: return "dfa";
    case Method::rs: return "rs";
    case Method::tta: return "tta";
    case Method::pm: return "pm";
    case Method::awc: return "awc";
    case Method::vvl: return "vvl";
    case Method::lw: return "lw";
    case Method::lssd: return "lssd";
    case Method::lsv: return "lsv";
  }
  return "?";
}

Method parse_method(std::string_view tag) {
  for (auto m : kAllMethods) {
    if (method_name(m) == tag) return m;
  }
  throw ArgumentError("unknown method '" + std::string(tag) + "'");
}

EstimateResult estimate(const TimeSeries& x, Method method,
                        const EstimatorConfig& config) {
  EstimateResult r;
  switch (method) {
    case Method::am:
      r = estimate_central(x, config.window, 1, config.norm, config.alpha);
      break;
    case Method::av:
      r = estimate_central(x, config.window, 2, config.norm, config.alpha);
      break;
    case Method::ghe: r = estimate_ghe(x, config.q_order, config.norm); break;
    case Method::hm: r = estimate_higuchi(x, config.norm); break;
    case Method::dfa:
      r = estimate_dfa(x, config.window, config.norm, config.alpha);
      break;
    case Method::rs:
      r = estimate_rs(x, config.window, config.norm, config.rs_corrected,
                      config.alpha);
      break;
    case Method::tta: r = estimate_tta(x, config.norm); break;
    case Method::pm: r = estimate_periodogram(x, config.cutoff, config.norm); break;
    case Method::awc: r = estimate_dwt(x, 1, config.norm); break;
    case Method::vvl: r = estimate_dwt(x, 2, config.norm); break;
    case Method::lw: r = estimate_local_whittle(x); break;
    case Method::lssd:
      r = estimate_lssd(x, config.weight_p, config.penalty_q, config.epsilon);
      break;
    case Method::lsv:
      r = estimate_lsv(x, config.weight_p, config.penalty_q, config.epsilon);
      break;
  }
  r.config = config;
  return r;
}

namespace detail {

numerics::RegressionFit fit_scaling(const ScaleStatistics& ss, Norm norm,
                                    Diagnostics& diag) {
  for (std::size_t i = 0; i < ss.stats.size(); ++i) {
    if (!(ss.stats[i] > 0.0)) {
      throw DegenerateSequenceError(
          "scaling statistic is not positive at scale " +
          std::to_string(ss.scales[i]) + " (degenerate sequence)");
    }
  }
  const auto pair = numerics::format_power_law_data(ss.scales, ss.stats);
  const auto fit = numerics::linear_regr_solver(pair, norm);
  diag.residual_norm = fit.residual_norm;
  diag.regression_points = pair.size();
  return fit;
}

std::vector<double> centred(const TimeSeries& x) {
  const double mu = seqkit::mean(x.values());
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - mu;
  return out;
}

void finish(EstimateResult& r) {
  if (!std::isfinite(r.hurst)) {
    throw DataError(std::string(method_name(r.method)) +
                    " produced a non-finite estimate");
  }
  r.diagnostics.out_of_range = !(r.hurst > 0.0 && r.hurst < 1.0);
}

}  // namespace detail
}  // namespace hurst
