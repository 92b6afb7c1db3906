#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dunkl/potential.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

/// Everything a suite needs to build its scene. Sweep lists left empty fall
/// back to per-suite defaults; an empty kappa_list means "the configured group".
struct RunConfig {
  std::string group_kind = "z2";  // z2 | dihedral
  int dim = 1;
  std::vector<double> multiplicities{0.5};
  int dihedral_m = 4;
  double R = 10.0;
  int N = 128;
  std::string potential = "soft_coulomb";
  std::map<std::string, double> potential_params;
  std::string potential_csv;
  std::vector<std::string> suites;
  std::vector<double> t_list, p_list, q_list, kappa_list;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
};

RootSystem configured_group(const RunConfig& cfg);
Potential configured_potential(const RunConfig& cfg);
/// Throws an Input error describing the first violated invariant.
void validate(const RunConfig& cfg);

struct Check {
  std::string name;
  double value = 0.0;
  std::string op;  // "<=" or ">="
  double bound = 0.0;
  bool hard = true;
  bool pass = false;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

struct SuiteResult {
  std::string name;
  std::string anchor;
  std::vector<Check> checks;
  std::map<std::string, std::string> labels;
  Table table;

  void check(const std::string& what, double value, const std::string& op, double bound,
             bool hard = true);
  /// Hard checks only, or all of them when strict.
  bool pass(bool strict = false) const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::string anchor;
  std::function<SuiteResult(const RunConfig&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Fixed-format number for CSV cells: identical inputs give identical text.
std::string fmt(double v);

}  // namespace dunkl
