#include "hurst/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hurst/error.hpp"

namespace hurst::numerics {

namespace {

struct Line {
  double intercept;
  double slope;
};

// Weighted least squares on centred sums. Weights may be empty (all ones).
Line weighted_ls(std::span<const double> a, std::span<const double> b,
                 std::span<const double> w) {
  const std::size_t n = a.size();
  double sw = 0.0, sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = w.empty() ? 1.0 : w[i];
    sw += wi;
    sa += wi * a[i];
    sb += wi * b[i];
  }
  const double abar = sa / sw;
  const double bbar = sb / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = w.empty() ? 1.0 : w[i];
    const double da = a[i] - abar;
    sxx += wi * da * da;
    sxy += wi * da * (b[i] - bbar);
  }
  if (!(sxx > 0.0)) {
    throw SingularSystemError("regression design is rank deficient");
  }
  const double slope = sxy / sxx;
  return {bbar - slope * abar, slope};
}

double l1_objective(std::span<const double> a, std::span<const double> b,
                    const Line& line) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::abs(b[i] - line.intercept - line.slope * a[i]);
  }
  return s;
}

double l2_objective(std::span<const double> a, std::span<const double> b,
                    const Line& line) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = b[i] - line.intercept - line.slope * a[i];
    s += r * r;
  }
  return std::sqrt(s);
}

// Best line through point `pivot`: the slope is a weighted median of the
// slopes to every other point, weighted by horizontal distance. Returns the
// index of the point the median slope came from.
std::size_t best_through(std::span<const double> a, std::span<const double> b,
                         std::size_t pivot, Line& line) {
  struct Cand {
    double slope;
    double weight;
    std::size_t index;
  };
  std::vector<Cand> c;
  double total = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double da = a[j] - a[pivot];
    if (da == 0.0) continue;
    c.push_back({(b[j] - b[pivot]) / da, std::abs(da), j});
    total += std::abs(da);
  }
  std::sort(c.begin(), c.end(), [](const Cand& x, const Cand& y) { return x.slope < y.slope; });
  double acc = 0.0;
  std::size_t k = 0;
  for (; k + 1 < c.size(); ++k) {
    acc += c[k].weight;
    if (acc >= 0.5 * total) break;
  }
  line = {b[pivot] - c[k].slope * a[pivot], c[k].slope};
  return c[k].index;
}

// Direct descent over lines through pairs of points: re-optimize through
// each point the current line touches, stop when none of them improves.
Line least_absolute(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const Line ls = weighted_ls(a, b, {});
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(b[i] - ls.intercept - ls.slope * a[i]) <
        std::abs(b[pivot] - ls.intercept - ls.slope * a[pivot])) {
      pivot = i;
    }
  }
  Line line{};
  best_through(a, b, pivot, line);
  double best = l1_objective(a, b, line);
  for (std::size_t step = 0; step < 4 * n + 8; ++step) {
    bool improved = false;
    const double scale = std::max(1.0, best);
    for (std::size_t i = 0; i < n && !improved; ++i) {
      const double r = b[i] - line.intercept - line.slope * a[i];
      if (std::abs(r) > 1e-12 * scale) continue;
      Line trial{};
      best_through(a, b, i, trial);
      const double obj = l1_objective(a, b, trial);
      if (obj < best - 1e-14 * scale) {
        line = trial;
        best = obj;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return line;
}

}  // namespace

PowerLawPair format_power_law_data(std::span<const double> x,
                                   std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ArgumentError("power-law data lengths differ: " +
                        std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()));
  }
  if (x.size() < 2) {
    throw InsufficientDataError("power-law fit is underdetermined with " +
                                std::to_string(x.size()) + " point(s)");
  }
  PowerLawPair pair;
  pair.log_x.resize(x.size());
  pair.log_y.resize(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) ||
        !std::isfinite(y[i])) {
      throw DomainError("nonpositive power-law entry at index " +
                            std::to_string(i + 1),
                        i + 1);
    }
    pair.log_x[i] = std::log(x[i]);
    pair.log_y[i] = std::log(y[i]);
  }
  return pair;
}

RegressionFit fit_line(std::span<const double> a, std::span<const double> b,
                       Norm norm) {
  if (a.size() != b.size()) throw ArgumentError("regression lengths differ");
  if (a.size() < 2) throw InsufficientDataError("regression needs 2 points");
  if (std::all_of(a.begin(), a.end(), [&](double v) { return v == a[0]; })) {
    throw SingularSystemError("all abscissae identical; slope undefined");
  }
  const Line line = norm == Norm::l1 ? least_absolute(a, b) : weighted_ls(a, b, {});
  RegressionFit fit;
  fit.intercept = line.intercept;
  fit.slope = line.slope;
  fit.norm = norm;
  fit.residual_norm =
      norm == Norm::l1 ? l1_objective(a, b, line) : l2_objective(a, b, line);
  return fit;
}

RegressionFit linear_regr_solver(const PowerLawPair& pair, Norm norm) {
  return fit_line(pair.log_x, pair.log_y, norm);
}

double fixed_point_solve(const std::function<double(double)>& update, double x0,
                         double eps) {
  if (!(eps > 0.0)) throw ArgumentError("fixed-point tolerance must be positive");
  double guess = x0;
  double improve = update(guess);
  for (int it = 1; euclid_dist(improve, guess) >= eps; ++it) {
    if (it >= kFixedPointMaxIter || !std::isfinite(improve)) {
      throw ConvergenceError("fixed-point iteration did not converge after " +
                                 std::to_string(it) + " steps",
                             guess, improve);
    }
    guess = improve;
    improve = update(guess);
  }
  return improve;
}

double euclid_dist(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ArgumentError("distance between vectors of different length");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double euclid_dist(double x, double y) { return std::abs(x - y); }

double loc_min_solve(const std::function<double(double)>& f, double lo,
                     double hi, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("minimizer tolerance must be positive");
  if (!(lo < hi)) throw ArgumentError("minimizer bracket must satisfy lo < hi");

  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double rel = std::sqrt(std::numeric_limits<double>::epsilon());

  double a = lo, b = hi;
  double v = a + golden * (b - a);
  double w = v, x = v;
  double e = 0.0, d = 0.0;
  double fx = f(x);
  double fv = fx, fw = fx;

  for (int evals = 1; evals < kBrentMaxEval; ++evals) {
    const double xm = 0.5 * (a + b);
    const double tol1 = rel * std::abs(x) + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;

    bool use_golden = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      r = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * r) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = xm >= x ? tol1 : -tol1;
        use_golden = false;
      }
    }
    if (use_golden) {
      e = (x >= xm) ? a - x : b - x;
      d = golden * e;
    }

    double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    u = std::clamp(u, lo, hi);
    const double fu = f(u);

    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return x;
}

}  // namespace hurst::numerics
