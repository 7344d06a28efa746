#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hurst/error.hpp"
#include "hurst/transforms.hpp"
#include "support.hpp"

using namespace hurst;
using namespace hurst::transforms;

namespace {

std::vector<Complex> direct_dft(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>((k * t) % n) /
                         static_cast<double>(n);
      acc += x[t] * std::polar(1.0, ang);
    }
    out[k] = acc;
  }
  return out;
}

double energy(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return s;
}

}  // namespace

TEST_CASE("dft small cases") {
  const auto c = dft(std::vector<double>{1, 1, 1, 1});
  CHECK(std::abs(c[0] - Complex(4, 0)) < 1e-15);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(c[k]) < 1e-15);
  const auto d = dft(std::vector<double>{1, 0, 0, 0});
  for (const auto& v : d) CHECK(std::abs(v - Complex(1, 0)) < 1e-15);
  CHECK_THROWS_AS(dft(std::vector<double>{}), ArgumentError);
}

TEST_CASE("dft matches the direct sum") {
  for (std::size_t n : {7u, 16u, 100u, 255u, 1u, 2u, 3u}) {
    const auto re = support::uniform(n, n);
    const auto im = support::uniform(n, n + 99);
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = {re[i], im[i]};
    const auto fast = dft(x);
    const auto slow = direct_dft(x);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(fast[k] - slow[k]));
    INFO("n = " << n);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("inverse transform") {
  std::vector<double> x{1, 2, 3, 4, 5};
  const auto back = idft(dft(x));
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(back[i].real() - x[i]) < 1e-12);
    CHECK(std::abs(back[i].imag()) < 1e-12);
  }
  std::vector<Complex> spike(6, 0.0);
  spike[0] = 6.0;
  for (const auto& v : idft(spike)) CHECK(std::abs(v - Complex(1, 0)) < 1e-15);

  for (std::size_t n : {1000u, 1024u, 30000u}) {
    const auto y = support::uniform(n, 77);
    const auto r = idft(dft(y));
    double worst = 0.0, imag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(r[i].real() - y[i]));
      imag = std::max(imag, std::abs(r[i].imag()));
    }
    CHECK(worst < 1e-10);
    CHECK(imag < 1e-10);
  }
}

TEST_CASE("Parseval") {
  const auto x = support::uniform(1000, 5);
  const auto c = dft(x);
  double spec = 0.0;
  for (const auto& v : c) spec += std::norm(v);
  CHECK(spec / 1000.0 == doctest::Approx(energy(x)).epsilon(1e-9));
  const auto p = periodogram(x);
  double total = 0.0;
  for (double v : p) {
    CHECK(v >= 0.0);
    total += v;
  }
  CHECK(total == doctest::Approx(energy(x)).epsilon(1e-9));
}

TEST_CASE("periodogram of constants and shifts") {
  const auto p = periodogram(std::vector<double>(8, 2.0));
  CHECK(p[0] == doctest::Approx(8 * 4.0));
  for (std::size_t k = 1; k < 8; ++k) CHECK(p[k] < 1e-24);
  for (double v : periodogram(std::vector<double>(5, 0.0))) CHECK(v == 0.0);

  const auto x = support::uniform(200, 9);
  auto shifted = x;
  for (double& v : shifted) v += 3.5;
  const auto a = periodogram(x), b = periodogram(shifted);
  CHECK(std::abs(a[0] - b[0]) > 1.0);
  for (std::size_t k = 1; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
}

TEST_CASE("wavelet filters") {
  for (auto w : {Wavelet::haar, Wavelet::db24}) {
    const auto h = scaling_filter(w);
    double s = 0.0, s2 = 0.0;
    for (double v : h) {
      s += v;
      s2 += v * v;
    }
    CHECK(s == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(s2 == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t shift = 2; shift < h.size(); shift += 2) {
      double dot = 0.0;
      for (std::size_t i = 0; i + shift < h.size(); ++i) dot += h[i] * h[i + shift];
      CHECK(std::abs(dot) < 1e-12);
    }
  }
  CHECK(scaling_filter(Wavelet::db24).size() == 48);
  CHECK(parse_wavelet("daubechies-24") == Wavelet::db24);
  CHECK(parse_wavelet("haar") == Wavelet::haar);
  CHECK_THROWS_AS(parse_wavelet("db4"), ArgumentError);
}

TEST_CASE("Haar cascade by hand") {
  const std::vector<double> alt{1, -1, 1, -1, 1, -1, 1, -1};
  const auto dec = wavedec(alt, Wavelet::haar, 3);
  REQUIRE(dec.levels() == 3);
  CHECK(dec.details[0].size() == 4);
  for (double d : dec.details[0]) CHECK(std::abs(d) == doctest::Approx(std::sqrt(2.0)));
  for (int j = 1; j < 3; ++j) {
    for (double d : dec.details[j]) CHECK(std::abs(d) < 1e-12);
  }

  const auto x = support::uniform(64, 3);
  const auto one = wavedec(x, Wavelet::haar, 1);
  for (std::size_t i = 0; i < 32; ++i) {
    CHECK(std::abs(one.details[0][i]) ==
          doctest::Approx(std::abs(x[2 * i] - x[2 * i + 1]) / std::sqrt(2.0)).epsilon(1e-13));
  }
}

TEST_CASE("wavelet vanishing moments and energy") {
  for (auto w : {Wavelet::haar, Wavelet::db24}) {
    const auto flat = wavedec(std::vector<double>(256, 4.2), w, 8);
    for (const auto& lvl : flat.details) {
      for (double d : lvl) CHECK(std::abs(d) < 1e-10);
    }
    const auto x = support::uniform(1024, 21);
    const auto dec = wavedec(x, w, 10);
    double e = energy(dec.approximation);
    for (const auto& lvl : dec.details) e += energy(lvl);
    CHECK(e == doctest::Approx(energy(x)).epsilon(1e-8));
  }
}

TEST_CASE("wavelet level bookkeeping") {
  const auto x = support::uniform(30000, 1);
  const auto dec = wavedec(x, Wavelet::db24, 14);
  std::size_t total = dec.approximation.size();
  for (int j = 1; j <= dec.levels(); ++j) {
    total += dec.details[j - 1].size();
    if (j > 1) CHECK(dec.details[j - 1].size() <= dec.details[j - 2].size());
  }
  CHECK(total <= x.size());
  CHECK(dec.details[0].size() == 15000);
  CHECK_THROWS_AS(wavedec(x, Wavelet::haar, 15), ArgumentError);
  CHECK_THROWS_AS(wavedec(x, Wavelet::haar, 0), ArgumentError);
}
