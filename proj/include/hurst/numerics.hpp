#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hurst {

/// Norm used for every linear fit in the estimators.
enum class Norm { l1 = 1, l2 = 2 };

namespace numerics {

/// Design matrix rows (1, ln x_i) and right-hand side ln y_i.
struct PowerLawPair {
  std::vector<double> log_x;  // second design column; first column is all ones
  std::vector<double> log_y;

  std::size_t size() const noexcept { return log_x.size(); }
};

struct RegressionFit {
  double intercept = 0.0;
  double slope = 0.0;
  Norm norm = Norm::l2;

  /// Residual norm of the fit under its own norm (sum |r| for l1,
  /// sqrt(sum r^2) for l2).
  double residual_norm = 0.0;
};

/// Throws InsufficientDataError for n < 2, DomainError (1-based index) for a
/// nonpositive entry, ArgumentError for mismatched lengths.
PowerLawPair format_power_law_data(std::span<const double> x,
                                   std::span<const double> y);

/// Straight-line fit of b ~ alpha + beta * a under the l1 or l2 norm.
/// Throws SingularSystemError when every abscissa is identical.
RegressionFit fit_line(std::span<const double> a, std::span<const double> b,
                       Norm norm);

/// Fit of the log-log pair.
RegressionFit linear_regr_solver(const PowerLawPair& pair, Norm norm);

/// Iteration cap shared with ConvergenceError reporting.
inline constexpr int kFixedPointMaxIter = 10000;

/// Iterates x <- update(x) from `x0` until two consecutive iterates are
/// closer than `eps`. Throws ConvergenceError (with the last two iterates)
/// after kFixedPointMaxIter steps.
double fixed_point_solve(const std::function<double(double)>& update, double x0,
                         double eps);

/// Euclidean distance; ArgumentError on length mismatch.
double euclid_dist(std::span<const double> x, std::span<const double> y);
double euclid_dist(double x, double y);

inline constexpr int kBrentMaxEval = 500;

/// Brent's minimizer (golden section + successive parabolic interpolation)
/// on [lo, hi]. Never evaluates `f` outside the bracket. Throws
/// ArgumentError for tol <= 0 or lo >= hi.
double loc_min_solve(const std::function<double(double)>& f, double lo,
                     double hi, double tol);

}  // namespace numerics
}  // namespace hurst
