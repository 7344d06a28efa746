#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hurst/error.hpp"
#include "hurst/harness.hpp"

namespace hurst {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

const char* norm_tag(Norm n) { return n == Norm::l1 ? "l1" : "l2"; }

}  // namespace

TimeSeries read_series(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path.string() + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    double v = 0.0;
    if (!parse_double(body, v) || !std::isfinite(v)) {
      throw ParseError(path.string() + ": line " + std::to_string(lineno) +
                           ": not a finite number: '" + std::string(body) + "'",
                       lineno);
    }
    values.push_back(v);
  }
  if (values.size() < 2) {
    throw InsufficientDataError(path.string() + ": need at least 2 values, found " +
                                std::to_string(values.size()));
  }
  return TimeSeries(std::move(values));
}

void write_fgn(const std::filesystem::path& path, const generators::FgnSpec& spec) {
  const auto x = generators::gen_fgn(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path.string() + "'");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", spec.hurst);
  out << "# fgn hurst=" << buf << " length=" << spec.length
      << " seed=" << spec.seed << '\n';
  for (double v : x) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << '\n';
  }
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

generators::FgnSpec parse_fgn_header(const std::string& line) {
  std::istringstream is(line);
  std::string hash, tag;
  is >> hash >> tag;
  if (hash != "#" || tag != "fgn") throw ParseError("not an FGN header: " + line, 1);
  generators::FgnSpec spec{};
  int seen = 0;
  std::string field;
  while (is >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("bad header field: " + field, 1);
    const auto key = field.substr(0, eq);
    const auto val = field.substr(eq + 1);
    try {
      if (key == "hurst") {
        spec.hurst = std::stod(val);
      } else if (key == "length") {
        spec.length = std::stoull(val);
      } else if (key == "seed") {
        spec.seed = std::stoull(val);
      } else {
        continue;
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad header value: " + field, 1);
    }
    ++seen;
  }
  if (seen != 3) throw ParseError("incomplete FGN header: " + line, 1);
  return spec;
}

EstimateResult estimate_file(const std::filesystem::path& path, Method method,
                             const EstimatorConfig& config) {
  return estimate(read_series(path), method, config);
}

nlohmann::json config_to_json(const EstimatorConfig& c) {
  return {{"window", c.window},       {"norm", norm_tag(c.norm)},
          {"q_order", c.q_order},     {"cutoff", c.cutoff},
          {"weight_p", c.weight_p},   {"penalty_q", c.penalty_q},
          {"epsilon", c.epsilon},     {"rs_corrected", c.rs_corrected},
          {"alpha", c.alpha}};
}

nlohmann::json result_to_json(const EstimateResult& r) {
  const auto& d = r.diagnostics;
  return {{"method", method_name(r.method)},
          {"hurst", r.hurst},
          {"config", config_to_json(r.config)},
          {"diagnostics",
           {{"residual_norm", d.residual_norm},
            {"regression_points", d.regression_points},
            {"excluded_segments", d.excluded_segments},
            {"discarded_samples", d.discarded_samples},
            {"out_of_range", d.out_of_range}}}};
}

}  // namespace hurst
