#include <array>
#include <cmath>
#include <string>

#include "hurst/error.hpp"
#include "hurst/transforms.hpp"

namespace hurst::transforms {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

constexpr std::array<double, 2> kHaar = {kInvSqrt2, kInvSqrt2};

// db24 scaling filter, 24 vanishing moments (extremal phase).
constexpr std::array<double, 48> kDb24 = {
    1.91435800947551365e-04, 3.08208171490549458e-03,
    2.24823399497164102e-02, 9.72622358336251991e-02,
    2.72908916067726326e-01, 5.04371040839925011e-01,
    5.74939221095541964e-01, 2.80985553233711882e-01,
    -1.87271406885156227e-01, -3.17943078999362749e-01,
    4.77661368434472832e-03, 2.39237388780310867e-01,
    4.25287296414838326e-02, -1.71175351370346895e-01,
    -3.87771735779200155e-02, 1.21016303469224235e-01,
    2.09801137091448139e-02, -8.21616542080016721e-02,
    -4.57843624181922173e-03, 5.13016200399808789e-02,
    -4.94470942812562809e-03, -2.82131070949018896e-02,
    7.66172188164658628e-03, 1.30499708710857358e-02,
    -6.29143537001818770e-03, -4.74656878632311388e-03,
    3.73604617828252354e-03, 1.15376493683948147e-03,
    -1.69645681897482442e-03, -4.41618485614151985e-05,
    5.86127059318310986e-04, -1.18123323796955469e-04,
    -1.46007981776261688e-04, 6.55938863930563462e-05,
    2.18324146046655820e-05, -2.02288829261269758e-05,
    1.34115775080911471e-08, 3.90110033859770284e-06,
    -8.98025314393840724e-07, -4.03250775687997184e-07,
    2.16633965327857454e-07, -5.05764541979250037e-10,
    -2.25574038817608622e-08, 5.15777678967199964e-09,
    4.74837582425623146e-10, -4.02465864458437969e-10,
    6.99180115763823054e-11, -4.34278250380371010e-12,
};

// One analysis stage: periodic convolution with the low/high-pass pair
// followed by downsampling by two.
void analysis_step(std::span<const double> filter, std::vector<double> signal,
                   std::vector<double>& approx, std::vector<double>& detail) {
  if (signal.size() % 2 == 1) signal.pop_back();
  const std::size_t len = signal.size();
  const std::size_t half = len / 2;
  const std::size_t taps = filter.size();
  approx.assign(half, 0.0);
  detail.assign(half, 0.0);
  for (std::size_t n = 0; n < half; ++n) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k < taps; ++k) {
      const double s = signal[(2 * n + k) % len];
      lo += filter[k] * s;
      // g[k] = (-1)^k h[taps-1-k]
      const double g = (k % 2 == 0 ? 1.0 : -1.0) * filter[taps - 1 - k];
      hi += g * s;
    }
    approx[n] = lo;
    detail[n] = hi;
  }
}

}  // namespace

Wavelet parse_wavelet(std::string_view name) {
  if (name == "haar") return Wavelet::haar;
  if (name == "db24" || name == "daubechies-24") return Wavelet::db24;
  throw ArgumentError("unknown wavelet '" + std::string(name) + "'");
}

std::string_view wavelet_name(Wavelet w) {
  return w == Wavelet::haar ? "haar" : "db24";
}

std::span<const double> scaling_filter(Wavelet w) {
  if (w == Wavelet::haar) return kHaar;
  return kDb24;
}

WaveletDecomposition wavedec(std::span<const double> x, Wavelet wavelet,
                             int levels) {
  if (x.size() < 2) throw InsufficientDataError("wavelet decomposition needs 2 samples");
  const int max_levels = static_cast<int>(std::floor(std::log2(static_cast<double>(x.size()))));
  if (levels < 1 || levels > max_levels) {
    throw ArgumentError("decomposition level " + std::to_string(levels) +
                        " outside [1, " + std::to_string(max_levels) + "]");
  }
  const auto filter = scaling_filter(wavelet);
  WaveletDecomposition out{wavelet, {}, {}};
  out.details.reserve(static_cast<std::size_t>(levels));
  std::vector<double> current(x.begin(), x.end());
  for (int j = 0; j < levels; ++j) {
    std::vector<double> approx, detail;
    analysis_step(filter, std::move(current), approx, detail);
    out.details.push_back(std::move(detail));
    current = std::move(approx);
  }
  out.approximation = std::move(current);
  return out;
}

}  // namespace hurst::transforms
