// dunklkit: run verification suites from a config file.
//
//   dunklkit run <config> [--out DIR] [--seed N] [--threads N] [--strict]
//   dunklkit list-suites
//   dunklkit plotdata <report> <curve> [--p P] [--q Q]
//
// Exit codes: 0 all hard checks pass, 1 a hard check failed,
// 2 malformed config or arguments, 3 numerical failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>

#include <omp.h>

#include "CLI11.hpp"
#include "dunkl/config.hpp"
#include "dunkl/error.hpp"

using namespace dunkl;

namespace {

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Numerical:
    case ErrorKind::Range:
      return 3;
    default:
      return 2;
  }
}

int run(const std::string& path, const std::optional<std::string>& out,
        const std::optional<std::uint64_t>& seed, bool strict) {
  RunConfig cfg = load_config(path);
  if (out) cfg.output_dir = *out;
  if (seed) cfg.seed = *seed;
  std::vector<SuiteResult> results;
  bool all = true;
  for (const auto& name : cfg.suites) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite(name, cfg);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.pass(strict);
    all = all && ok;
    std::printf("%-20s %s  [%s]  (%.1fs)\n", r.name.c_str(), ok ? "pass" : "FAIL", r.anchor.c_str(), dt);
    for (const auto& c : r.checks)
      std::printf("    %-32s %.3e %s %.3e  %s%s\n", c.name.c_str(), c.value, c.op.c_str(), c.bound,
                  c.pass ? "ok" : "violated", c.hard || strict ? "" : " (soft)");
    results.push_back(std::move(r));
  }
  write_reports(cfg.output_dir, cfg, results, strict);
  std::printf("reports in %s\n", cfg.output_dir.c_str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl harmonic analysis verification suites"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)");

  auto* run_cmd = app.add_subcommand("run", "run the suites listed in a config");
  std::string config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  bool strict = false;
  run_cmd->add_option("config", config, "YAML or JSON run config")->required();
  run_cmd->add_option("--out", out, "output directory (overrides the config)");
  run_cmd->add_option("--seed", seed, "random seed (overrides the config)");
  run_cmd->add_option("--threads", threads, "OpenMP threads (0 keeps the default)");
  run_cmd->add_flag("--strict", strict, "treat soft checks as hard");

  auto* list_cmd = app.add_subcommand("list-suites", "print the suite registry");

  auto* plot_cmd = app.add_subcommand("plotdata", "print a curve from a report as CSV");
  std::string report, curve, p = "1", q = "inf";
  plot_cmd->add_option("report", report, "output directory or its summary.json")->required();
  plot_cmd->add_option("curve", curve, "curve name")->required();
  plot_cmd->add_option("--p", p, "p for smoothing_norm_vs_t");
  plot_cmd->add_option("--q", q, "q for smoothing_norm_vs_t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*list_cmd) {
      for (const auto& s : suite_registry())
        std::printf("%-20s %s\n%-20s   anchor: %s\n", s.name.c_str(), s.description.c_str(), "",
                    s.anchor.c_str());
      return 0;
    }
    if (*plot_cmd) {
      plotdata(std::cout, report, curve, p, q);
      return 0;
    }
    return run(config, out, seed, strict);
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", e.module().c_str(), e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
