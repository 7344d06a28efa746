#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace hurst::transforms {

using Complex = std::complex<double>;

/// Forward DFT, X_k = sum_t x_t exp(-2 pi i k t / N), any length >= 1.
/// Power-of-two lengths use an iterative radix-2 FFT; other lengths go
/// through Bluestein's chirp-z reduction.
std::vector<Complex> dft(std::span<const Complex> x);
std::vector<Complex> dft(std::span<const double> x);

/// Inverse DFT including the 1/N factor.
std::vector<Complex> idft(std::span<const Complex> spectrum);

/// I(k) = |X_k|^2 / N for k = 0..N-1 (bin 0 is the DC term).
std::vector<double> periodogram(std::span<const double> x);

enum class Wavelet { haar, db24 };

/// Parses "haar" or "db24" / "daubechies-24"; ArgumentError otherwise.
Wavelet parse_wavelet(std::string_view name);
std::string_view wavelet_name(Wavelet w);

/// Scaling (low-pass) filter taps of an orthogonal wavelet.
std::span<const double> scaling_filter(Wavelet w);

struct WaveletDecomposition {
  Wavelet wavelet;
  /// details[j-1] holds the level-j coefficients (scale 2^j).
  std::vector<std::vector<double>> details;
  /// Approximation left after the last level.
  std::vector<double> approximation;

  int levels() const noexcept { return static_cast<int>(details.size()); }
};

/// Multilevel periodic DWT cascade. Requires 1 <= levels <= floor(log2 N).
/// An odd-length stage drops its last sample, so the total coefficient
/// count never exceeds N.
WaveletDecomposition wavedec(std::span<const double> x, Wavelet wavelet,
                             int levels);

}  // namespace hurst::transforms
