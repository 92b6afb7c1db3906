#include "dunkl/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include <yaml-cpp/yaml.h>

#include "dunkl/error.hpp"

namespace dunkl {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Input, "config", what); }

void only_keys(const YAML::Node& n, const std::string& where, std::set<std::string> allowed) {
  if (!n.IsMap()) bad(where + " must be a table");
  for (const auto& kv : n) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) bad("unknown key '" + key + "' in " + where);
  }
}

double number(const YAML::Node& n, const std::string& where) {
  if (!n.IsScalar()) bad(where + " must be a number");
  const auto s = n.Scalar();
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  try {
    return n.as<double>();
  } catch (const YAML::Exception&) {
    bad(where + ": '" + s + "' is not a number");
  }
}

std::vector<double> numbers(const YAML::Node& n, const std::string& where) {
  if (!n.IsSequence()) bad(where + " must be a list");
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(number(n[i], where));
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    bad(std::string("cannot parse: ") + e.what());
  }
  RunConfig cfg;
  cfg.suites.clear();
  if (root.IsNull()) return cfg;
  only_keys(root, "config", {"group", "grid", "potential", "suites", "sweep", "output", "seed"});

  if (auto g = root["group"]) {
    only_keys(g, "group", {"kind", "dim", "multiplicities", "m"});
    if (g["kind"]) cfg.group_kind = g["kind"].as<std::string>();
    if (g["dim"]) cfg.dim = static_cast<int>(number(g["dim"], "group.dim"));
    if (g["multiplicities"]) cfg.multiplicities = numbers(g["multiplicities"], "group.multiplicities");
    if (g["m"]) cfg.dihedral_m = static_cast<int>(number(g["m"], "group.m"));
  }
  if (auto g = root["grid"]) {
    only_keys(g, "grid", {"R", "N"});
    if (g["R"]) cfg.R = number(g["R"], "grid.R");
    if (g["N"]) {
      const double n = number(g["N"], "grid.N");
      if (n != static_cast<int>(n)) bad("grid.N must be an integer");
      cfg.N = static_cast<int>(n);
    }
  }
  if (auto p = root["potential"]) {
    only_keys(p, "potential", {"preset", "params", "csv"});
    if (p["preset"]) cfg.potential = p["preset"].as<std::string>();
    if (auto ps = p["params"]) {
      if (!ps.IsMap()) bad("potential.params must be a table");
      for (const auto& kv : ps) {
        const auto key = kv.first.as<std::string>();
        cfg.potential_params[key] = number(kv.second, "potential.params." + key);
      }
    }
    if (p["csv"]) {
      fs::path csv = p["csv"].as<std::string>();
      if (csv.is_relative()) csv = fs::path(base_dir) / csv;
      cfg.potential_csv = csv.string();
    }
  }
  if (auto s = root["suites"]) {
    if (!s.IsSequence()) bad("suites must be a list");
    for (std::size_t i = 0; i < s.size(); ++i) cfg.suites.push_back(s[i].as<std::string>());
  }
  if (auto s = root["sweep"]) {
    only_keys(s, "sweep", {"t_list", "p_list", "q_list", "kappa_list"});
    if (s["t_list"]) cfg.t_list = numbers(s["t_list"], "sweep.t_list");
    if (s["p_list"]) cfg.p_list = numbers(s["p_list"], "sweep.p_list");
    if (s["q_list"]) cfg.q_list = numbers(s["q_list"], "sweep.q_list");
    if (s["kappa_list"]) cfg.kappa_list = numbers(s["kappa_list"], "sweep.kappa_list");
  }
  if (root["output"]) cfg.output_dir = root["output"].as<std::string>();
  if (root["seed"]) {
    try {
      cfg.seed = root["seed"].as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      bad("seed must be a nonnegative integer");
    }
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), fs::path(path).parent_path().string().empty()
                                    ? std::string(".")
                                    : fs::path(path).parent_path().string());
}

void write_table(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_reports(const std::string& dir, const RunConfig& cfg,
                   const std::vector<SuiteResult>& results, bool strict) {
  fs::create_directories(dir);
  nlohmann::ordered_json summary;
  summary["seed"] = cfg.seed;
  summary["strict"] = strict;
  bool all = true;
  auto suites = nlohmann::ordered_json::object();
  for (const auto& r : results) {
    nlohmann::ordered_json s;
    s["anchor"] = r.anchor;
    s["pass"] = r.pass(strict);
    all = all && r.pass(strict);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json j;
      j["name"] = c.name;
      j["value"] = fmt(c.value);
      j["op"] = c.op;
      j["bound"] = fmt(c.bound);
      j["hard"] = c.hard || strict;
      j["pass"] = c.pass;
      checks.push_back(j);
    }
    s["checks"] = checks;
    s["labels"] = r.labels;
    suites[r.name] = s;

    std::ofstream csv(fs::path(dir) / (r.name + ".csv"));
    write_table(csv, r.table);
  }
  summary["pass"] = all;
  summary["suites"] = suites;
  std::ofstream out(fs::path(dir) / "summary.json");
  out << summary.dump(2) << '\n';
}

std::vector<std::string> plot_curves() {
  return {"kato_modulus_vs_t", "heat_modulus_vs_t", "trotter_error_vs_n", "smoothing_norm_vs_t"};
}

namespace {

Table read_table(const fs::path& p) {
  std::ifstream in(p);
  if (!in) bad("report file '" + p.string() + "' not found");
  Table t;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line))
    if (!line.empty()) t.add(split(line));
  return t;
}

std::size_t column(const Table& t, const std::string& name) {
  const auto it = std::find(t.header.begin(), t.header.end(), name);
  if (it == t.header.end()) bad("report has no column '" + name + "'");
  return static_cast<std::size_t>(it - t.header.begin());
}

bool same_number(const std::string& cell, const std::string& want) {
  if (cell == want) return true;
  try {
    const double a = std::stod(cell);
    const double b = want == "inf" ? std::numeric_limits<double>::infinity() : std::stod(want);
    return a == b || std::abs(a - b) <= 1e-9 * std::abs(b);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

void plotdata(std::ostream& os, const std::string& report, const std::string& curve,
              const std::string& p, const std::string& q) {
  fs::path dir = report;
  if (fs::is_regular_file(dir)) dir = dir.parent_path();
  if (curve == "kato_modulus_vs_t") {
    const auto t = read_table(dir / "kato_modulus.csv");
    const auto a = column(t, "t"), b = column(t, "classical"), c = column(t, "orbit");
    os << "t,classical,orbit\n";
    for (const auto& r : t.rows) os << r[a] << ',' << r[b] << ',' << r[c] << '\n';
  } else if (curve == "heat_modulus_vs_t") {
    const auto t = read_table(dir / "kato_heat.csv");
    const auto k = column(t, "kind"), a = column(t, "param"), v = column(t, "value");
    os << "t,heat_modulus\n";
    for (const auto& r : t.rows)
      if (r[k] == "heat_modulus") os << r[a] << ',' << r[v] << '\n';
  } else if (curve == "trotter_error_vs_n") {
    const auto t = read_table(dir / "trotter.csv");
    const auto k = column(t, "kappa"), n = column(t, "n"), g = column(t, "gap");
    os << "kappa,n,gap\n";
    for (const auto& r : t.rows) os << r[k] << ',' << r[n] << ',' << r[g] << '\n';
  } else if (curve == "smoothing_norm_vs_t") {
    const auto t = read_table(dir / "smoothing.csv");
    const auto k = column(t, "kappa"), tt = column(t, "t"), pc = column(t, "p"), qc = column(t, "q"),
               v = column(t, "value");
    os << "kappa,t,value\n";
    for (const auto& r : t.rows)
      if (same_number(r[pc], p) && same_number(r[qc], q)) os << r[k] << ',' << r[tt] << ',' << r[v] << '\n';
  } else {
    bad("unknown curve '" + curve + "'");
  }
}

}  // namespace dunkl
