#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hurst/time_series.hpp"

namespace hurst::generators {

/// 64-bit mixing function used to derive independent seeds from
/// (base seed, index) pairs.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

/// i.i.d. N(mu, sigma^2) draws, deterministic per seed.
/// ArgumentError when sigma <= 0.
std::vector<double> gen_gauss(double mu, double sigma, std::size_t length,
                              std::uint64_t seed);

enum class Distribution { normal, chisq, geometric, poisson, exponential, uniform };

/// Tags: "normal", "chisq", "geometric", "poisson", "exponential", "uniform".
Distribution parse_distribution(std::string_view tag);
std::string_view distribution_name(Distribution d);

inline constexpr Distribution kAllDistributions[] = {
    Distribution::normal,  Distribution::chisq,       Distribution::geometric,
    Distribution::poisson, Distribution::exponential, Distribution::uniform};

/// Draws from normal(0,1), chisq(1), geometric(0.25) (trials to first
/// success, support 1,2,...), poisson(5), exponential(1) or uniform[0,1).
std::vector<double> gen_iid(Distribution dist, std::size_t length,
                            std::uint64_t seed);

/// FGN autocorrelation 0.5 (|t+1|^2H - 2|t|^2H + |t-1|^2H).
double fgn_autocorr(std::int64_t lag, double hurst);

struct FgnSpec {
  double hurst;
  std::size_t length;
  std::uint64_t seed;
};

/// Fractional Gaussian noise by circulant embedding, scaled by length^-H.
/// ArgumentError for hurst outside (0,1) or length < 2.
TimeSeries gen_fgn(const FgnSpec& spec);

}  // namespace hurst::generators
