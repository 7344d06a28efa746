#include "hurst/bayes.hpp"

#include <cmath>
#include <string>

#include "hurst/error.hpp"
#include "hurst/seqkit.hpp"

namespace hurst {

namespace {

constexpr double kLsvLower = 0.001;
constexpr double kLsvUpper = 0.999;
constexpr double kSingularGuard = 1e-12;

double ratio(double m, double n) {
  const double u = n / m;
  if (!(u > 1.0)) {
    throw ArgumentError("block scale m = " + std::to_string(m) +
                        " must be smaller than N = " + std::to_string(n));
  }
  return u;
}

void check_context(const BlockScaleContext& ctx) {
  if (ctx.scales.empty() || ctx.scales.size() != ctx.stats.size()) {
    throw ArgumentError("block scale context needs equal, non-empty vectors");
  }
}

void check_solver_args(const TimeSeries& x, double p, double eps) {
  if (x.size() < 100) {
    throw InsufficientDataError("block-sum estimators need at least 100 samples, got " +
                                std::to_string(x.size()));
  }
  if (!(p >= 0.0)) throw ArgumentError("weight p must be nonnegative");
  if (!(eps > 0.0)) throw ArgumentError("epsilon must be positive");
}

}  // namespace

double block_sum_std(std::span<const double> x, std::int64_t m) {
  if (m < 1) throw ArgumentError("block size must be positive");
  const auto size = static_cast<std::size_t>(m);
  const std::size_t k = x.size() / size;
  if (k < 2) {
    throw ArgumentError("block size " + std::to_string(m) +
                        " leaves fewer than 2 blocks");
  }
  std::vector<double> z(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < size; ++j) z[i] += x[i * size + j];
  }
  return seqkit::sample_std(z);
}

BlockScaleContext block_scale_context(std::span<const double> x, double p,
                                      double q) {
  BlockScaleContext ctx;
  ctx.n = static_cast<double>(x.size());
  ctx.p = p;
  ctx.q = q;
  const auto m_max = static_cast<std::int64_t>(x.size() / 10);
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double s = block_sum_std(x, m);
    if (s > 0.0) {
      ctx.scales.push_back(static_cast<double>(m));
      ctx.stats.push_back(s);
    }
  }
  if (ctx.scales.size() < 2) {
    throw DegenerateSequenceError("block sums show no spread at any scale");
  }
  return ctx;
}

double lssd_cm(double m, double n, double h) {
  const double u = ratio(m, n);
  return std::sqrt((u - std::pow(u, 2.0 * h - 1.0)) / (u - 0.5));
}

double lssd_dm(double m, double n, double h) {
  const double u = ratio(m, n);
  const double den = 1.0 - std::pow(u, 2.0 - 2.0 * h);
  if (std::abs(den) < kSingularGuard) {
    throw SingularSystemError("d_m is singular at H = " + std::to_string(h));
  }
  return std::log(m) + std::log(u) / den;
}

double lssd_map(double h, const BlockScaleContext& ctx) {
  check_context(ctx);
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0, b1 = 0, b2 = 0;
  for (std::size_t i = 0; i < ctx.scales.size(); ++i) {
    const double m = ctx.scales[i];
    const double c = lssd_cm(m, ctx.n, h);
    const double d = lssd_dm(m, ctx.n, h);
    const double u = std::pow(m, ctx.p);
    const double lm = std::log(m);
    const double resid = std::log(ctx.stats[i]) - std::log(c);
    a11 += 1.0 / u;
    a12 += lm / u;
    a21 += d / u;
    a22 += d * lm / u;
    b1 += resid / u;
    b2 += d * resid / u;
  }
  const double den = a11 * a22 - a21 * a12;
  if (den == 0.0) throw SingularSystemError("LSSD normal equations are singular");
  return (a11 * (b2 - std::pow(h, ctx.q)) - a21 * b1) / den;
}

EstimateResult estimate_lssd(const TimeSeries& x, double p, double q, double eps) {
  check_solver_args(x, p, eps);
  EstimateResult r;
  r.method = Method::lssd;
  r.config.weight_p = p;
  r.config.penalty_q = q;
  r.config.epsilon = eps;
  const auto ctx = block_scale_context(detail::centred(x), p, q);
  r.hurst = numerics::fixed_point_solve(
      [&](double h) { return lssd_map(h, ctx); }, 0.5, eps);
  r.diagnostics.regression_points = ctx.scales.size();
  r.diagnostics.excluded_segments =
      static_cast<std::size_t>(x.size() / 10) - ctx.scales.size();
  r.diagnostics.residual_norm = std::abs(lssd_map(r.hurst, ctx) - r.hurst);
  detail::finish(r);
  return r;
}

double lsv_cm(double m, double n, double h) {
  const double u = ratio(m, n);
  return (u - std::pow(u, 2.0 * h - 1.0)) / (u - 1.0);
}

double lsv_objective(double h, const BlockScaleContext& ctx) {
  check_context(ctx);
  double a11 = 0, a12 = 0, b1 = 0;
  for (std::size_t i = 0; i < ctx.scales.size(); ++i) {
    const double m = ctx.scales[i];
    const double s2 = ctx.stats[i] * ctx.stats[i];
    const double c = lsv_cm(m, ctx.n, h);
    const double u = std::pow(m, ctx.p);
    const double m2h = std::pow(m, 2.0 * h);
    b1 += s2 * s2 / u;
    a11 += c * c * m2h * m2h / u;
    a12 += c * m2h * s2 / u;
  }
  if (a11 == 0.0) throw SingularSystemError("LSV objective has a11 = 0");
  return b1 - a12 * a12 / a11 + std::pow(h, ctx.q + 1.0) / (ctx.q + 1.0);
}

EstimateResult estimate_lsv(const TimeSeries& x, double p, double q, double eps) {
  check_solver_args(x, p, eps);
  EstimateResult r;
  r.method = Method::lsv;
  r.config.weight_p = p;
  r.config.penalty_q = q;
  r.config.epsilon = eps;
  // The penalty has fixed units while the fit error scales with the fourth
  // power of the data, so the series is brought to unit variance first.
  auto z = detail::centred(x);
  const double sd = seqkit::sample_std(z);
  if (!(sd > 0.0)) throw DegenerateSequenceError("constant series has no fluctuation");
  for (double& v : z) v /= sd;
  const auto ctx = block_scale_context(z, p, q);
  r.hurst = numerics::loc_min_solve(
      [&](double h) { return lsv_objective(h, ctx); }, kLsvLower, kLsvUpper, eps);
  r.diagnostics.regression_points = ctx.scales.size();
  r.diagnostics.excluded_segments =
      static_cast<std::size_t>(x.size() / 10) - ctx.scales.size();
  r.diagnostics.residual_norm = lsv_objective(r.hurst, ctx);
  detail::finish(r);
  return r;
}

}  // namespace hurst
