#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "hurst/error.hpp"
#include "hurst/harness.hpp"
#include "hurst/seqkit.hpp"

namespace hurst {

namespace {

constexpr std::size_t kMethods = kAllMethods.size();

struct Outcome {
  double hurst = std::numeric_limits<double>::quiet_NaN();
  std::string error;
};

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

// Runs every method on every (label, replicate) series and folds the
// outcomes into rows. `make` builds the series for one pair.
BenchReport run_suite(std::string suite, std::vector<std::string> labels,
                      const std::vector<double>& reference,
                      const BenchOptions& opt,
                      const std::function<TimeSeries(std::size_t, std::uint64_t)>& make) {
  if (opt.replicates < 1) throw ArgumentError("replicates must be at least 1");
  const auto reps = static_cast<std::size_t>(opt.replicates);
  const std::size_t nl = labels.size();
  std::vector<Outcome> out(nl * reps * kMethods);

  parallel_for(nl * reps, opt.threads, [&](std::size_t task) {
    const std::size_t li = task / reps, rep = task % reps;
    const auto seed = generators::split_seed(generators::split_seed(opt.seed, li), rep);
    Outcome* slot = &out[task * kMethods];
    std::optional<TimeSeries> x;
    try {
      x.emplace(make(li, seed));
    } catch (const Error& e) {
      for (std::size_t mi = 0; mi < kMethods; ++mi) slot[mi].error = e.what();
      return;
    }
    for (std::size_t mi = 0; mi < kMethods; ++mi) {
      try {
        slot[mi].hurst = estimate(*x, kAllMethods[mi], opt.config).hurst;
      } catch (const Error& e) {
        slot[mi].error = e.what();
      }
    }
  });

  BenchReport report;
  report.suite = std::move(suite);
  report.length = opt.length;
  report.replicates = opt.replicates;
  report.seed = opt.seed;
  report.config = opt.config;
  report.labels = std::move(labels);
  for (std::size_t li = 0; li < nl; ++li) {
    for (std::size_t mi = 0; mi < kMethods; ++mi) {
      BenchRow row;
      row.label = report.labels[li];
      row.method = kAllMethods[mi];
      row.replicates = opt.replicates;
      row.seed = opt.seed;
      std::vector<double> h, err;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto& o = out[(li * reps + rep) * kMethods + mi];
        if (!o.error.empty()) {
          row.failed = true;
          if (row.error.empty()) row.error = o.error;
          continue;
        }
        h.push_back(o.hurst);
        err.push_back(relative_error(o.hurst, reference[li]));
      }
      if (row.failed) {
        row.mean = row.stdev = row.rel_error = std::numeric_limits<double>::quiet_NaN();
      } else {
        row.mean = seqkit::mean(h);
        row.stdev = h.size() > 1 ? seqkit::sample_std(h) : 0.0;
        row.rel_error = seqkit::mean(err);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string fmt(double v, const char* spec = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void write_header(std::ostream& os, const BenchReport& r) {
  os << "# suite=" << r.suite << " length=" << r.length
     << " replicates=" << r.replicates << " seed=" << r.seed
     << " config=" << config_to_json(r.config).dump() << '\n';
}

}  // namespace

const BenchRow& BenchReport::at(std::size_t label, Method m) const {
  const auto mi = static_cast<std::size_t>(
      std::find(kAllMethods.begin(), kAllMethods.end(), m) - kAllMethods.begin());
  return rows.at(label * kMethods + mi);
}

double relative_error(double h_hat, double h_true) {
  if (!(h_true > 0.0)) throw ArgumentError("reference H must be positive");
  return std::abs(h_hat - h_true) / h_true * 100.0;
}

BenchReport run_random_suite(const BenchOptions& opt) {
  std::vector<std::string> labels;
  for (auto d : generators::kAllDistributions) {
    labels.emplace_back(generators::distribution_name(d));
  }
  const std::vector<double> reference(labels.size(), 0.5);
  return run_suite("random", std::move(labels), reference, opt,
                   [&](std::size_t li, std::uint64_t seed) {
                     return TimeSeries(generators::gen_iid(
                         generators::kAllDistributions[li], opt.length, seed));
                   });
}

BenchReport run_fgn_suite(const std::vector<double>& h_values,
                          const BenchOptions& opt) {
  if (h_values.empty()) throw ArgumentError("empty H grid");
  std::vector<std::string> labels;
  for (double h : h_values) {
    if (!(h > 0.0 && h < 1.0)) throw ArgumentError("H grid values must lie in (0, 1)");
    labels.push_back(fmt(h, "%g"));
  }
  return run_suite("fgn", std::move(labels), h_values, opt,
                   [&](std::size_t li, std::uint64_t seed) {
                     return generators::gen_fgn({h_values[li], opt.length, seed});
                   });
}

std::vector<double> parse_h_grid(const std::string& text) {
  std::vector<double> out;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw ArgumentError("bad H grid entry '" + s + "'");
    }
  };
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(number(tok));
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
      throw ArgumentError("H grid range must be lo:hi:step with step > 0");
    }
    const auto steps = static_cast<int>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (int i = 0; i <= steps; ++i) {
      // Rounded to 1e-10 so 0.3 + 4 * 0.05 prints as 0.5.
      out.push_back(std::round((parts[0] + i * parts[2]) * 1e10) / 1e10);
    }
  } else {
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) out.push_back(number(tok));
  }
  if (out.empty()) throw ArgumentError("empty H grid");
  return out;
}

void write_matrix_tsv(std::ostream& os, const BenchReport& r) {
  write_header(os, r);
  os << (r.suite == "fgn" ? "H" : "distribution");
  for (auto m : kAllMethods) os << '\t' << method_name(m);
  os << '\n';
  for (std::size_t li = 0; li < r.labels.size(); ++li) {
    os << r.labels[li];
    for (auto m : kAllMethods) {
      const auto& row = r.at(li, m);
      os << '\t' << (row.failed ? std::string("FAIL") : fmt(row.mean));
    }
    os << '\n';
  }
}

void write_long_tsv(std::ostream& os, const BenchReport& r) {
  write_header(os, r);
  os << "label\tmethod\tmean\tstd\trel_error_pct\treplicates\tseed\tstatus\n";
  for (const auto& row : r.rows) {
    os << row.label << '\t' << method_name(row.method) << '\t'
       << fmt(row.mean, "%.6f") << '\t' << fmt(row.stdev, "%.6f") << '\t'
       << fmt(row.rel_error, "%.4f") << '\t' << row.replicates << '\t'
       << row.seed << '\t' << (row.failed ? "FAIL: " + one_line(row.error) : "ok")
       << '\n';
  }
}

}  // namespace hurst
