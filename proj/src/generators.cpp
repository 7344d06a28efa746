#include "hurst/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hurst/error.hpp"
#include "hurst/transforms.hpp"

namespace hurst::generators {

std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> gen_gauss(double mu, double sigma, std::size_t length,
                              std::uint64_t seed) {
  if (!(sigma > 0.0)) throw ArgumentError("gaussian sigma must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(mu, sigma);
  std::vector<double> out(length);
  for (auto& v : out) v = dist(rng);
  return out;
}

Distribution parse_distribution(std::string_view tag) {
  for (auto d : kAllDistributions) {
    if (distribution_name(d) == tag) return d;
  }
  throw ArgumentError("unknown distribution '" + std::string(tag) + "'");
}

std::string_view distribution_name(Distribution d) {
  switch (d) {
    case Distribution::normal: return "normal";
    case Distribution::chisq: return "chisq";
    case Distribution::geometric: return "geometric";
    case Distribution::poisson: return "poisson";
    case Distribution::exponential: return "exponential";
    case Distribution::uniform: return "uniform";
  }
  return "?";
}

std::vector<double> gen_iid(Distribution dist, std::size_t length,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(length);
  auto fill = [&](auto&& law) {
    for (auto& v : out) v = static_cast<double>(law(rng));
  };
  switch (dist) {
    case Distribution::normal: fill(std::normal_distribution<double>(0.0, 1.0)); break;
    case Distribution::chisq: fill(std::chi_squared_distribution<double>(1.0)); break;
    case Distribution::geometric: {
      std::geometric_distribution<long> law(0.25);
      for (auto& v : out) v = static_cast<double>(law(rng) + 1);
      break;
    }
    case Distribution::poisson: fill(std::poisson_distribution<long>(5.0)); break;
    case Distribution::exponential: fill(std::exponential_distribution<double>(1.0)); break;
    case Distribution::uniform: fill(std::uniform_real_distribution<double>(0.0, 1.0)); break;
  }
  return out;
}

double fgn_autocorr(std::int64_t lag, double hurst) {
  const double t = std::abs(static_cast<double>(lag));
  const double e = 2.0 * hurst;
  return 0.5 * (std::pow(t + 1.0, e) - 2.0 * std::pow(t, e) +
                std::pow(std::abs(t - 1.0), e));
}

TimeSeries gen_fgn(const FgnSpec& spec) {
  if (!(spec.hurst > 0.0 && spec.hurst < 1.0)) {
    throw ArgumentError("hurst exponent must lie in (0, 1)");
  }
  if (spec.length < 2) throw ArgumentError("FGN length must be at least 2");
  const std::size_t len = spec.length;
  const std::size_t n2 = 2 * len;

  // First row of the symmetric circulant: rho_0..rho_len, rho_{len-1}..rho_1.
  std::vector<double> row(n2);
  for (std::size_t k = 0; k <= len; ++k) {
    row[k] = fgn_autocorr(static_cast<std::int64_t>(k), spec.hurst);
  }
  for (std::size_t k = 1; k < len; ++k) row[n2 - k] = row[k];

  const auto eig = transforms::dft(row);
  double top = 0.0;
  for (const auto& g : eig) top = std::max(top, g.real());
  std::vector<double> root(n2);
  for (std::size_t k = 0; k < n2; ++k) {
    const double g = eig[k].real();
    if (g < -1e-9 * top) {
      throw Error("circulant embedding has a negative eigenvalue " +
                  std::to_string(g) + " at bin " + std::to_string(k));
    }
    root[k] = std::sqrt(std::max(g, 0.0));
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> m(len), n(len);
  for (auto& v : m) v = normal(rng);
  for (auto& v : n) v = normal(rng);

  // Hermitian weights so the transform below is real.
  std::vector<transforms::Complex> w(n2);
  const double edge = 1.0 / std::sqrt(static_cast<double>(n2));
  const double inner = 1.0 / std::sqrt(2.0 * static_cast<double>(n2));
  w[0] = root[0] * edge * m[0];
  w[len] = root[len] * edge * n[0];
  for (std::size_t j = 1; j < len; ++j) {
    w[j] = root[j] * inner * transforms::Complex(m[j], n[j]);
    w[n2 - j] = root[n2 - j] * inner * transforms::Complex(m[j], -n[j]);
  }

  const auto f = transforms::dft(w);
  const double scale = std::pow(static_cast<double>(len), -spec.hurst);
  std::vector<double> out(len);
  for (std::size_t t = 0; t < len; ++t) out[t] = scale * f[t].real();
  return TimeSeries(std::move(out));
}

}  // namespace hurst::generators
