#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurst/estimate.hpp"
#include "hurst/generators.hpp"

namespace hurst {

/// One value per line; blank lines and '#' comments are skipped.
TimeSeries read_series(const std::filesystem::path& path);

/// Writes the series with 17 significant digits under a '#' header line.
void write_fgn(const std::filesystem::path& path, const generators::FgnSpec& spec);

/// Parses "# fgn hurst=H length=N seed=S"; ParseError otherwise.
generators::FgnSpec parse_fgn_header(const std::string& line);

EstimateResult estimate_file(const std::filesystem::path& path, Method method,
                             const EstimatorConfig& config = {});

nlohmann::json config_to_json(const EstimatorConfig& config);
nlohmann::json result_to_json(const EstimateResult& result);

/// Percent error |h_hat - h| / h * 100; ArgumentError for h <= 0.
double relative_error(double h_hat, double h_true);

struct BenchRow {
  std::string label;  // distribution name or H value
  Method method = Method::am;
  double mean = 0.0;
  double stdev = 0.0;
  double rel_error = 0.0;  // mean relative error against the reference H
  int replicates = 0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
};

struct BenchReport {
  std::string suite;
  std::size_t length = 0;
  int replicates = 0;
  std::uint64_t seed = 0;
  EstimatorConfig config;
  std::vector<std::string> labels;
  std::vector<BenchRow> rows;  // label-major, methods in kAllMethods order

  const BenchRow& at(std::size_t label, Method m) const;
};

struct BenchOptions {
  int replicates = 10;
  std::size_t length = 10000;
  std::uint64_t seed = 42;
  EstimatorConfig config;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

/// Six i.i.d. distributions against all thirteen methods; reference H = 0.5.
BenchReport run_random_suite(const BenchOptions& opt);

/// FGN at each H in `h_values` against all thirteen methods.
BenchReport run_fgn_suite(const std::vector<double>& h_values,
                          const BenchOptions& opt);

/// "a:b:step" or a comma-separated list.
std::vector<double> parse_h_grid(const std::string& text);

/// Methods as columns, one row per label, mean estimates.
void write_matrix_tsv(std::ostream& os, const BenchReport& report);

/// One row per (label, method) cell with every statistic.
void write_long_tsv(std::ostream& os, const BenchReport& report);

}  // namespace hurst
