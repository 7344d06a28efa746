#include "hurst/seqkit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hurst/error.hpp"

namespace hurst {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw InsufficientDataError("time series needs at least 2 samples, got " +
                                std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("non-finite sample at index " + std::to_string(i + 1),
                        i + 1);
    }
  }
}

namespace seqkit {

namespace {

// Neumaier's variant of Kahan summation: exact for integer-valued data that
// fits in the mantissa, and keeps the cumulative-bias tail at O(eps).
struct CompensatedSum {
  double total = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = total + v;
    if (std::abs(total) >= std::abs(v)) {
      carry += (total - t) + v;
    } else {
      carry += (v - t) + total;
    }
    total = t;
  }
  double value() const { return total + carry; }
};

std::int64_t isqrt(std::int64_t a) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(a)));
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r;
}

std::size_t count_sbpf(std::int64_t a, std::int64_t w) {
  if (a < 4 || w > isqrt(a)) return 0;
  std::size_t count = 0;
  const std::int64_t hi = a / w;
  for (std::int64_t d = w; d <= hi; ++d) {
    if (a % d == 0) ++count;
  }
  return count;
}

}  // namespace

double sum(std::span<const double> x) {
  CompensatedSum acc;
  for (double v : x) acc.add(v);
  return acc.value();
}

double mean(std::span<const double> x) {
  if (x.empty()) throw InsufficientDataError("mean of an empty sequence");
  return sum(x) / static_cast<double>(x.size());
}

std::vector<double> cumsum(std::span<const double> x) {
  std::vector<double> out(x.size());
  CompensatedSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc.add(x[i]);
    out[i] = acc.value();
  }
  return out;
}

std::vector<double> cumulative_bias(std::span<const double> x) {
  const double mu = mean(x);
  std::vector<double> out(x.size());
  CompensatedSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc.add(x[i] - mu);
    out[i] = acc.value();
  }
  return out;
}

double sample_std(std::span<const double> x) {
  if (x.size() < 2) {
    throw InsufficientDataError("standard deviation needs at least 2 values");
  }
  const double mu = mean(x);
  CompensatedSum acc;
  for (double v : x) {
    const double d = v - mu;
    acc.add(d * d);
  }
  return std::sqrt(acc.value() / static_cast<double>(x.size() - 1));
}

std::vector<std::int64_t> gen_sbpf(std::int64_t a, std::int64_t w) {
  if (a < 4) {
    throw ArgumentError("bounded proper factors need a >= 4, got " +
                        std::to_string(a));
  }
  if (w < 2 || w > isqrt(a)) {
    throw ArgumentError("window " + std::to_string(w) + " outside [2, " +
                        std::to_string(isqrt(a)) + "] for a = " +
                        std::to_string(a));
  }
  std::vector<std::int64_t> factors;
  const std::int64_t hi = a / w;
  for (std::int64_t d = w; d <= hi; ++d) {
    if (a % d == 0) factors.push_back(d);
  }
  return factors;
}

std::int64_t search_opt_seq_len(std::int64_t n, std::int64_t w, double alpha) {
  if (!(alpha >= 0.95 && alpha <= 1.0)) {
    throw ArgumentError("alpha must lie in [0.95, 1]");
  }
  if (w < 2) throw ArgumentError("window must be at least 2");
  const auto n0 = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(alpha * static_cast<double>(n))));
  std::int64_t best = -1;
  std::size_t best_count = 0;
  for (std::int64_t i = n0; i <= n; ++i) {
    const std::size_t c = count_sbpf(i, w);
    if (c > 0 && c >= best_count) {
      best_count = c;
      best = i;
    }
  }
  if (best < 0) {
    throw NoPartitionError("no length in [" + std::to_string(n0) + ", " +
                           std::to_string(n) +
                           "] has a bounded proper factor for window " +
                           std::to_string(w));
  }
  return best;
}

std::vector<std::vector<double>> seq_partition(std::span<const double> x,
                                               std::int64_t m, std::int64_t k) {
  if (m < 1 || k < 1) throw ArgumentError("segment size and count must be positive");
  if (static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(k) > x.size()) {
    throw ArgumentError("m*k = " + std::to_string(m * k) +
                        " exceeds series length " + std::to_string(x.size()));
  }
  std::vector<std::vector<double>> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (std::int64_t t = 0; t < k; ++t) {
    auto first = x.begin() + t * m;
    parts.emplace_back(first, first + m);
  }
  return parts;
}

std::vector<PartitionScheme> PartitionPlan::schemes() const {
  std::vector<PartitionScheme> out;
  out.reserve(sizes.size());
  for (auto m : sizes) out.push_back({n_opt, m, n_opt / m, w});
  return out;
}

PartitionPlan plan_partition(std::int64_t n, std::int64_t w, double alpha) {
  if (w < 2) throw ArgumentError("window must be at least 2");
  if (n < w * w) {
    throw InsufficientDataError("series length " + std::to_string(n) +
                                " is below window^2 = " +
                                std::to_string(w * w));
  }
  PartitionPlan plan;
  plan.n = n;
  plan.w = w;
  plan.n_opt = search_opt_seq_len(n, w, alpha);
  plan.sizes = gen_sbpf(plan.n_opt, w);
  return plan;
}

}  // namespace seqkit
}  // namespace hurst
