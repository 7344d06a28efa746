#include <bit>
#include <cmath>
#include <numbers>

#include "hurst/error.hpp"
#include "hurst/transforms.hpp"

namespace hurst::transforms {

namespace {

// In-place iterative radix-2 transform; n must be a power of two.
// sign = -1 for the forward transform, +1 for the unnormalized inverse.
void radix2(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::size_t half = len / 2;
    // Twiddles from direct cos/sin rather than repeated multiplication, so
    // the error does not grow with len.
    std::vector<Complex> tw(half);
    for (std::size_t k = 0; k < half; ++k) {
      tw[k] = std::polar(1.0, ang * static_cast<double>(k));
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + half] * tw[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

std::vector<Complex> bluestein(std::span<const Complex> x, int sign) {
  const std::size_t n = x.size();
  const std::size_t m = std::bit_ceil(2 * n - 1);

  // chirp[k] = exp(sign * i pi k^2 / n); k^2 reduced mod 2n keeps the angle
  // small for large n.
  std::vector<Complex> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto k2 = static_cast<unsigned long long>(k) * k % (2 * n);
    chirp[k] = std::polar(1.0, sign * std::numbers::pi *
                                   static_cast<double>(k2) /
                                   static_cast<double>(n));
  }

  std::vector<Complex> a(m), b(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    b[k] = std::conj(chirp[k]);
    b[m - k] = std::conj(chirp[k]);
  }
  radix2(a, -1);
  radix2(b, -1);
  for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
  radix2(a, +1);

  std::vector<Complex> out(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

std::vector<Complex> transform(std::span<const Complex> x, int sign) {
  if (x.empty()) throw ArgumentError("DFT of an empty sequence");
  if (std::has_single_bit(x.size())) {
    std::vector<Complex> a(x.begin(), x.end());
    radix2(a, sign);
    return a;
  }
  return bluestein(x, sign);
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> x) { return transform(x, -1); }

std::vector<Complex> dft(std::span<const double> x) {
  std::vector<Complex> c(x.begin(), x.end());
  return transform(c, -1);
}

std::vector<Complex> idft(std::span<const Complex> spectrum) {
  auto out = transform(spectrum, +1);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<double> periodogram(std::span<const double> x) {
  const auto spec = dft(x);
  std::vector<double> out(spec.size());
  const double n = static_cast<double>(x.size());
  for (std::size_t k = 0; k < spec.size(); ++k) out[k] = std::norm(spec[k]) / n;
  return out;
}

}  // namespace hurst::transforms
