#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hurst/error.hpp"
#include "hurst/harness.hpp"

namespace {

void add_config_flags(CLI::App& cmd, hurst::EstimatorConfig& cfg, int& norm) {
  cmd.add_option("--window", cfg.window, "lower bound on segment size")->capture_default_str();
  cmd.add_option("--norm", norm, "regression norm")->check(CLI::IsMember({1, 2}))->capture_default_str();
  cmd.add_option("--q-order", cfg.q_order, "GHE moment order")->capture_default_str();
  cmd.add_option("--cutoff", cfg.cutoff, "periodogram frequency cutoff")->capture_default_str();
  cmd.add_option("--weight-p", cfg.weight_p, "LSSD/LSV weight exponent")->capture_default_str();
  cmd.add_option("--penalty-q", cfg.penalty_q, "LSSD/LSV penalty exponent")->capture_default_str();
  cmd.add_option("--epsilon", cfg.epsilon, "LSSD/LSV tolerance")->capture_default_str();
  cmd.add_option("--alpha", cfg.alpha, "optimal length search fraction")->capture_default_str();
  cmd.add_flag("--rs-corrected", cfg.rs_corrected, "apply the small-sample R/S correction");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurst exponent estimation toolkit"};
  app.require_subcommand(1);

  hurst::EstimatorConfig cfg;
  int norm = 2;

  auto* est = app.add_subcommand("estimate", "estimate H for a series file");
  std::string input, method_tag, format = "json";
  est->add_option("--input", input, "one value per line")->required();
  est->add_option("--method", method_tag, "am av ghe hm dfa rs tta pm awc vvl lw lssd lsv")->required();
  est->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  add_config_flags(*est, cfg, norm);

  auto* gen = app.add_subcommand("gen-fgn", "write fractional Gaussian noise");
  hurst::generators::FgnSpec spec{0.5, 30000, 1};
  std::string output;
  gen->add_option("--hurst", spec.hurst)->required();
  gen->add_option("--length", spec.length)->required();
  gen->add_option("--seed", spec.seed)->required();
  gen->add_option("--output", output)->required();

  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  std::string suite, grid = "0.3,0.5,0.7", out_dir = ".";
  hurst::BenchOptions opt;
  bench->add_option("suite", suite)->required()->check(CLI::IsMember({"random", "fgn"}));
  bench->add_option("--replicates", opt.replicates)->capture_default_str();
  bench->add_option("--length", opt.length)->capture_default_str();
  bench->add_option("--seed", opt.seed)->capture_default_str();
  bench->add_option("--h-grid", grid, "lo:hi:step or comma list")->capture_default_str();
  bench->add_option("--threads", opt.threads, "0 uses every core")->capture_default_str();
  bench->add_option("--out", out_dir)->capture_default_str();
  add_config_flags(*bench, cfg, norm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  cfg.norm = norm == 1 ? hurst::Norm::l1 : hurst::Norm::l2;

  try {
    if (*est) {
      const auto method = hurst::parse_method(method_tag);
      try {
        const auto r = hurst::estimate_file(input, method, cfg);
        if (format == "json") {
          std::cout << hurst::result_to_json(r).dump(2) << '\n';
        } else {
          std::cout << hurst::method_name(r.method) << '\t' << r.hurst << '\n';
        }
        if (r.diagnostics.out_of_range) {
          std::cerr << "warning: estimate lies outside (0, 1)\n";
        }
      } catch (const hurst::Error& e) {
        std::cerr << "error [" << method_tag << "]: " << e.what() << '\n';
        return dynamic_cast<const hurst::ArgumentError*>(&e) ? 1 : 2;
      }
    } else if (*gen) {
      hurst::write_fgn(output, spec);
    } else if (*bench) {
      opt.config = cfg;
      const auto report = suite == "random"
                              ? hurst::run_random_suite(opt)
                              : hurst::run_fgn_suite(hurst::parse_h_grid(grid), opt);
      std::filesystem::create_directories(out_dir);
      const auto base = std::filesystem::path(out_dir) / suite;
      std::ofstream matrix(base.string() + "_matrix.tsv");
      std::ofstream longform(base.string() + "_long.tsv");
      hurst::write_matrix_tsv(matrix, report);
      hurst::write_long_tsv(longform, report);
      hurst::write_matrix_tsv(std::cout, report);
    }
  } catch (const hurst::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hurst::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
