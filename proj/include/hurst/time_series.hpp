#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hurst {

/// Finite real-valued sample sequence with at least two entries.
///
/// Construction validates the invariants once, so every estimator can take
/// a `const TimeSeries&` without re-checking for NaN or short input.
class TimeSeries {
 public:
  /// Throws InsufficientDataError for fewer than two samples and
  /// DomainError for a non-finite sample.
  explicit TimeSeries(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  std::vector<double> values_;
};

}  // namespace hurst
