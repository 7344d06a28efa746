#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hurst/error.hpp"
#include "hurst/seqkit.hpp"
#include "support.hpp"

using namespace hurst;
using namespace hurst::seqkit;

namespace {

std::vector<std::int64_t> divisors_by_scan(std::int64_t a) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= a; ++d) {
    if (a % d == 0) out.push_back(d);
  }
  return out;
}

std::size_t bounded_count(std::int64_t a, std::int64_t w) {
  std::size_t c = 0;
  for (std::int64_t d = w; d * w <= a; ++d) {
    if (a % d == 0) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("cumsum") {
  CHECK(cumsum(std::vector<double>{1, 2, 3}) == std::vector<double>{1, 3, 6});
  CHECK(cumsum(std::vector<double>(5, 0.0)) == std::vector<double>(5, 0.0));
  const auto x = support::uniform(1000, 11);
  const auto c = cumsum(x);
  CHECK(std::abs(c.back() - 1000.0 * mean(x)) < 1e-10);
}

TEST_CASE("cumulative bias") {
  CHECK(cumulative_bias(std::vector<double>{1, 2, 3}) == std::vector<double>{-1, -1, 0});
  CHECK(cumulative_bias(std::vector<double>(7, 3.25)) == std::vector<double>(7, 0.0));

  const auto x = support::uniform(100000, 12, -50.0, 1e3);
  const auto y = cumulative_bias(x);
  double mx = 0.0;
  for (double v : x) mx = std::max(mx, std::abs(v));
  CHECK(std::abs(y.back()) <= 1e-9 * 100000 * mx);
}

TEST_CASE("sample std") {
  CHECK(sample_std(std::vector<double>{0, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sample_std(std::vector<double>{5, 5, 5}) == 0.0);
  // (1.5^2 + 0.5^2 + 0.5^2 + 1.5^2) / 3 = 5/3
  CHECK(sample_std(std::vector<double>{1, 2, 3, 4}) ==
        doctest::Approx(1.2909944487358056).epsilon(1e-14));
  CHECK_THROWS_AS(sample_std(std::vector<double>{1}), InsufficientDataError);
}

TEST_CASE("bounded proper factors: worked example") {
  CHECK(gen_sbpf(48, 4) == std::vector<std::int64_t>{4, 6, 8, 12});
  CHECK(gen_sbpf(48, 5) == std::vector<std::int64_t>{6, 8});
  CHECK(gen_sbpf(49, 2) == std::vector<std::int64_t>{7});
  CHECK(gen_sbpf(48, 2) == std::vector<std::int64_t>{2, 3, 4, 6, 8, 12, 16, 24});
  CHECK(gen_sbpf(97, 3).empty());
}

TEST_CASE("bounded proper factors: argument checks") {
  CHECK_THROWS_AS(gen_sbpf(48, 1), ArgumentError);
  CHECK_THROWS_AS(gen_sbpf(48, 7), ArgumentError);
  CHECK_THROWS_AS(gen_sbpf(3, 2), ArgumentError);
}

TEST_CASE("bounded proper factors match a divisor scan for a <= 10^4") {
  std::size_t mismatches = 0, checked = 0;
  for (std::int64_t a = 4; a <= 10000; ++a) {
    const auto all = divisors_by_scan(a);
    for (std::int64_t w = 2; w * w <= a; ++w) {
      std::vector<std::int64_t> expect;
      for (auto d : all) {
        if (d >= w && d <= a / w) expect.push_back(d);
      }
      const auto got = gen_sbpf(a, w);
      for (auto d : got) {
        if (a % d != 0) ++mismatches;
      }
      if (got != expect) ++mismatches;
      ++checked;
    }
  }
  CHECK(checked > 600000);
  CHECK(mismatches == 0);
}

TEST_CASE("optimal sequence length") {
  CHECK(search_opt_seq_len(997, 20, 0.99) == 990);
  CHECK(search_opt_seq_len(100, 2, 1.0) == 100);

  // Exhaustive argmax over [9907, 10007], largest length on ties.
  std::int64_t best = -1;
  std::size_t best_count = 0;
  for (std::int64_t i = 9907; i <= 10007; ++i) {
    const auto c = bounded_count(i, 50);
    if (c > 0 && c >= best_count) {
      best = i;
      best_count = c;
    }
  }
  CHECK(search_opt_seq_len(10007, 50, 0.99) == best);

  CHECK_THROWS_AS(search_opt_seq_len(1000, 20, 0.9), ArgumentError);
  CHECK_THROWS_AS(search_opt_seq_len(5, 2, 1.0), NoPartitionError);
}

TEST_CASE("optimal length stays inside the search window") {
  for (std::int64_t n : {2500, 2600, 4099, 9973, 10000, 30011}) {
    for (double alpha : {0.95, 0.99, 1.0}) {
      const auto w = std::min<std::int64_t>(50, static_cast<std::int64_t>(std::sqrt(n)));
      try {
        const auto got = search_opt_seq_len(n, w, alpha);
        CHECK(got <= n);
        CHECK(got >= static_cast<std::int64_t>(std::ceil(alpha * n)));
      } catch (const NoPartitionError&) {
        CHECK(alpha == 1.0);
      }
    }
  }
}

TEST_CASE("sequence partition") {
  std::vector<double> x{1, 2, 3, 4, 5, 6, 7};
  const auto p = seq_partition(std::span<const double>(x).first(6), 2, 3);
  CHECK(p == std::vector<std::vector<double>>{{1, 2}, {3, 4}, {5, 6}});
  const auto q = seq_partition(x, 3, 2);
  CHECK(q == std::vector<std::vector<double>>{{1, 2, 3}, {4, 5, 6}});
  std::vector<double> joined;
  for (const auto& s : q) joined.insert(joined.end(), s.begin(), s.end());
  CHECK(joined == std::vector<double>(x.begin(), x.begin() + 6));
  CHECK_THROWS_AS(seq_partition(x, 4, 2), ArgumentError);
}

TEST_CASE("partition plan: worked example") {
  const auto plan = plan_partition(997, 20, 0.99);
  CHECK(plan.n_opt == 990);
  CHECK(plan.discarded() == 7);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& s : plan.schemes()) pairs.emplace_back(s.m, s.k);
  CHECK(pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{
                     {22, 45}, {30, 33}, {33, 30}, {45, 22}});
}

TEST_CASE("partition plan invariants") {
  for (std::int64_t n : {2500, 3001, 10000, 30000}) {
    const auto plan = plan_partition(n, 50);
    const auto factors = gen_sbpf(plan.n_opt, 50);
    for (const auto& s : plan.schemes()) {
      CHECK(s.m * s.k == plan.n_opt);
      CHECK(std::find(factors.begin(), factors.end(), s.m) != factors.end());
      CHECK(s.m >= 50);
      CHECK(s.m <= plan.n_opt / 50);
    }
  }
  CHECK_THROWS_AS(plan_partition(2499, 50), InsufficientDataError);
}

TEST_CASE("time series invariants") {
  CHECK_THROWS_AS(TimeSeries(std::vector<double>{1.0}), InsufficientDataError);
  CHECK_THROWS_AS(TimeSeries(std::vector<double>{1.0, NAN}), DomainError);
  CHECK_THROWS_AS(TimeSeries(std::vector<double>{INFINITY, 1.0}), DomainError);
  const TimeSeries ts(std::vector<double>{1, 2, 3});
  CHECK(ts.size() == 3);
  CHECK(ts[2] == 3.0);
}
