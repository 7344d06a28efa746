#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hurst/generators.hpp"
#include "hurst/time_series.hpp"

namespace support {

inline std::vector<double> uniform(std::size_t n, std::uint64_t seed,
                                   double lo = -1.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& e : v) e = d(rng);
  return v;
}

// Integer-valued samples: centring them over a power-of-two length is exact.
inline std::vector<double> integers(std::size_t n, std::uint64_t seed, int span = 1000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-span, span);
  std::vector<double> v(n);
  for (auto& e : v) e = d(rng);
  return v;
}

inline hurst::TimeSeries fgn(double h, std::size_t n, std::uint64_t seed) {
  return hurst::generators::gen_fgn({h, n, seed});
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e;
  return s / static_cast<double>(v.size());
}

}  // namespace support
