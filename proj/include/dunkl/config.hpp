#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/suites.hpp"

namespace dunkl {

/// Parses a run config. The format is YAML with nested tables:
///
///   group:     {kind: z2, dim: 1, multiplicities: [0.5], m: 4}
///   grid:      {R: 10, N: 128}
///   potential: {preset: soft_coulomb, params: {a: 1}}   # or {csv: file.csv}
///   suites:    [plancherel, domination]
///   sweep:     {t_list: [], p_list: [], q_list: [], kappa_list: []}
///   output:    out
///   seed:      1
///
/// JSON is accepted as well. Unknown keys are rejected. A relative CSV path is
/// taken relative to `base_dir`. Infinity may be written as .inf or "inf".
RunConfig parse_config(const std::string& text, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

struct SummaryEntry {
  SuiteResult result;
  bool pass = false;
};

/// summary.json plus one CSV per suite in `dir`.
void write_reports(const std::string& dir, const RunConfig& cfg,
                   const std::vector<SuiteResult>& results, bool strict);
void write_table(std::ostream& os, const Table& t);

/// Curves: kato_modulus_vs_t, heat_modulus_vs_t, trotter_error_vs_n,
/// smoothing_norm_vs_t (filtered to the (p, q) pair). `report` is the output
/// directory or its summary.json. Throws an Input error on unknown curves.
void plotdata(std::ostream& os, const std::string& report, const std::string& curve,
              const std::string& p = "1", const std::string& q = "inf");

std::vector<std::string> plot_curves();

}  // namespace dunkl
