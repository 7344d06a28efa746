#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hurst/error.hpp"
#include "hurst/numerics.hpp"
#include "support.hpp"

using namespace hurst;
using namespace hurst::numerics;

namespace {

double l1_objective(std::span<const double> a, std::span<const double> b,
                    double alpha, double beta) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(b[i] - alpha - beta * a[i]);
  return s;
}

// Some l1-optimal line passes through two of the points, so the best line
// over all pairs is an exact oracle for the optimal objective.
double l1_pair_oracle(std::span<const double> a, std::span<const double> b) {
  double best = INFINITY;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j]) continue;
      const double beta = (b[j] - b[i]) / (a[j] - a[i]);
      best = std::min(best, l1_objective(a, b, b[i] - beta * a[i], beta));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("power-law data") {
  const auto p = format_power_law_data(std::vector<double>{1, std::numbers::e},
                                       std::vector<double>{1, std::exp(2.0)});
  CHECK(p.size() == 2);
  CHECK(p.log_x[0] == 0.0);
  CHECK(p.log_x[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.log_y[0] == 0.0);
  CHECK(p.log_y[1] == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(format_power_law_data(std::vector<double>{2}, std::vector<double>{4}),
                  InsufficientDataError);
  CHECK_THROWS_AS(format_power_law_data(std::vector<double>{1, 2}, std::vector<double>{1}),
                  ArgumentError);
  try {
    format_power_law_data(std::vector<double>{1, 2, 0.0}, std::vector<double>{1, 1, 1});
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.index() == 3);
  }
}

TEST_CASE("exact power laws") {
  for (Norm n : {Norm::l1, Norm::l2}) {
    const auto sq = linear_regr_solver(
        format_power_law_data(std::vector<double>{1, 2, 4, 8},
                              std::vector<double>{1, 4, 16, 64}),
        n);
    CHECK(sq.intercept == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(sq.slope == doctest::Approx(2.0).epsilon(1e-9));
    const auto lin = linear_regr_solver(
        format_power_law_data(std::vector<double>{1, 2, 3}, std::vector<double>{3, 6, 9}), n);
    CHECK(lin.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-9));
    CHECK(lin.slope == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lin.norm == n);
  }
}

TEST_CASE("l2 fit matches the normal equations") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(3, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(len(rng));
    const auto a = support::uniform(n, 1000 + trial, 0.0, 8.0);
    const auto b = support::uniform(n, 5000 + trial, -3.0, 3.0);
    // [n  Sa; Sa Saa] (alpha, beta) = (Sb, Sab), solved by Cramer's rule.
    long double sa = 0, saa = 0, sb = 0, sab = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sa += a[i];
      saa += static_cast<long double>(a[i]) * a[i];
      sb += b[i];
      sab += static_cast<long double>(a[i]) * b[i];
    }
    const long double det = n * saa - sa * sa;
    const double alpha = static_cast<double>((saa * sb - sa * sab) / det);
    const double beta = static_cast<double>((n * sab - sa * sb) / det);
    const auto fit = fit_line(a, b, Norm::l2);
    CHECK(std::abs(fit.intercept - alpha) < 1e-10);
    CHECK(std::abs(fit.slope - beta) < 1e-10);
  }
}

TEST_CASE("l1 fit reaches the pairwise-vertex optimum") {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 5 + trial % 20;
    const auto a = support::uniform(n, 300 + trial, 0.0, 5.0);
    auto b = support::uniform(n, 700 + trial, -1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) b[i] += 0.7 * a[i];
    const auto l1 = fit_line(a, b, Norm::l1);
    const auto l2 = fit_line(a, b, Norm::l2);
    const double got = l1_objective(a, b, l1.intercept, l1.slope);
    const double oracle = l1_pair_oracle(a, b);
    CHECK(got <= oracle + 1e-6);
    CHECK(got <= l1_objective(a, b, l2.intercept, l2.slope) + 1e-12);
    CHECK(l1.residual_norm == doctest::Approx(got).epsilon(1e-12));
  }
}

TEST_CASE("l1 fit resists an outlier") {
  std::vector<double> a, b;
  for (int i = 1; i <= 10; ++i) {
    a.push_back(i);
    b.push_back(i);
  }
  b[6] = 40.0;
  const auto l1 = fit_line(a, b, Norm::l1);
  const auto l2 = fit_line(a, b, Norm::l2);
  CHECK(std::abs(l1.slope - 1.0) < 1e-6);
  CHECK(std::abs(l1.intercept) < 1e-6);
  CHECK(std::abs(l2.slope - 1.0) > 0.1);
}

TEST_CASE("rank-deficient design") {
  CHECK_THROWS_AS(fit_line(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}, Norm::l2),
                  SingularSystemError);
  CHECK_THROWS_AS(fit_line(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}, Norm::l1),
                  SingularSystemError);
}

TEST_CASE("fixed-point iteration") {
  CHECK(std::abs(fixed_point_solve([](double x) { return x / 2 + 1; }, 0.0, 1e-8) - 2.0) < 1e-7);

  // Oracle: iterate cos until it stops moving in double precision.
  double ref = 0.5;
  for (int i = 0; i < 2000; ++i) ref = std::cos(ref);
  const double c = fixed_point_solve([](double x) { return std::cos(x); }, 0.5, 1e-10);
  CHECK(std::abs(c - ref) < 1e-7);
  CHECK(std::abs(c - 0.7390851332151607) < 1e-7);
  CHECK(std::abs(std::cos(c) - c) < 1e-10);

  int calls = 0;
  const double again = fixed_point_solve(
      [&](double x) {
        ++calls;
        return std::cos(x);
      },
      c, 1e-10);
  CHECK(calls <= 2);
  CHECK(std::abs(again - c) < 1e-10);

  try {
    fixed_point_solve([](double x) { return 2 * x; }, 1.0, 1e-8);
    FAIL("expected non-convergence");
  } catch (const ConvergenceError& e) {
    CHECK(e.last() != e.previous());
  }
}

TEST_CASE("euclidean distance") {
  CHECK(euclid_dist(3.0, 7.0) == 4.0);
  CHECK(euclid_dist(std::vector<double>{0, 0}, std::vector<double>{3, 4}) == 5.0);
  const auto v = support::uniform(9, 1);
  CHECK(euclid_dist(v, v) == 0.0);
  CHECK_THROWS_AS(euclid_dist(std::vector<double>{1}, std::vector<double>{1, 2}), ArgumentError);
}

TEST_CASE("Brent minimizer") {
  CHECK(std::abs(loc_min_solve([](double x) { return (x - 0.3) * (x - 0.3); }, 0, 1, 1e-8) -
                 0.3) < 1e-6);
  CHECK(loc_min_solve([](double x) { return x; }, 0, 1, 1e-8) < 1e-7);
  CHECK(std::abs(loc_min_solve([](double x) { return x * x * x * x - x * x; }, 0.2, 1.5, 1e-10) -
                 1.0 / std::sqrt(2.0)) < 1e-6);
  CHECK_THROWS_AS(loc_min_solve([](double x) { return x; }, 0, 1, 0.0), ArgumentError);
  CHECK_THROWS_AS(loc_min_solve([](double x) { return x; }, 1, 0, 1e-8), ArgumentError);
}

TEST_CASE("Brent stays in the bracket and beats a fine grid") {
  auto f = [](double x) { return std::sin(3 * x) + 0.5 * x * x; };
  double lo = INFINITY, hi = -INFINITY;
  const double x = loc_min_solve(
      [&](double t) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
        return f(t);
      },
      -1.0, 1.0, 1e-10);
  CHECK(lo >= -1.0);
  CHECK(hi <= 1.0);
  for (double g = -1.0; g <= 1.0; g += 1e-3) CHECK(f(x) <= f(g) + 1e-12);
}
