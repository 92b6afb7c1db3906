#include "dunkl/potential.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

double param(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string> potential_presets() {
  return {"zero", "constant", "soft_coulomb", "inverse_power", "bump"};
}

Potential make_potential(const std::string& name, const std::map<std::string, double>& params,
                         int dim) {
  require(dim >= 1, ErrorKind::Input, "potential", "dimension must be positive");
  Potential v;
  v.name = name;
  v.params = params;
  if (name == "zero") {
    v.fn = [](const Vec&) { return 0.0; };
  } else if (name == "constant") {
    const double c = param(params, "c", 1.0);
    require(c >= 0.0, ErrorKind::Input, "potential", "constant must be nonnegative");
    v.params["c"] = c;
    v.fn = [c](const Vec&) { return c; };
  } else if (name == "soft_coulomb") {
    const double a = param(params, "a", 1.0);
    require(a > 0.0, ErrorKind::Input, "potential", "soft_coulomb needs a > 0");
    v.params["a"] = a;
    v.fn = [a](const Vec& x) { return 1.0 / (a + x.squaredNorm()); };
  } else if (name == "inverse_power") {
    const double beta = param(params, "beta", 0.5);
    const double cut = param(params, "cutoff", 1.0);
    require(beta > 0.0 && cut > 0.0, ErrorKind::Input, "potential",
            "inverse_power needs beta > 0 and cutoff > 0");
    v.params["beta"] = beta;
    v.params["cutoff"] = cut;
    v.fn = [beta, cut](const Vec& x) {
      const double r = x.norm();
      if (r > cut) return 0.0;
      if (r == 0.0) return std::numeric_limits<double>::infinity();
      return std::pow(r, -beta);
    };
    v.singular_points.push_back(Vec::Zero(dim));
    v.support = cut;
  } else if (name == "bump") {
    const double h = param(params, "h", 1.0);
    const double w = param(params, "w", 2.0);
    require(h >= 0.0 && w > 0.0, ErrorKind::Input, "potential", "bump needs h >= 0 and w > 0");
    Vec c = Vec::Zero(dim);
    for (int j = 0; j < dim; ++j) c(j) = param(params, "c" + std::to_string(j), 0.0);
    v.params["h"] = h;
    v.params["w"] = w;
    v.fn = [h, w, c](const Vec& x) {
      const double q = (x - c).squaredNorm() / (w * w);
      return q >= 1.0 ? 0.0 : h * std::exp(1.0 - 1.0 / (1.0 - q));
    };
    v.support = c.norm() + w;
    v.g_invariant = c.isZero();
  } else {
    throw Error(ErrorKind::Input, "potential", "unknown preset '" + name + "'");
  }
  return v;
}

Potential potential_from_csv(std::istream& is, int dim) {
  std::vector<Vec> pts;
  std::vector<double> vals;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    Vec x(dim);
    double val = 0.0;
    bool ok = true;
    for (int j = 0; j < dim && ok; ++j) ok = static_cast<bool>(ss >> x(j));
    if (ok) ok = static_cast<bool>(ss >> val);
    if (!ok) {
      require(pts.empty(), ErrorKind::Input, "potential", "malformed CSV row: " + line);
      continue;  // header
    }
    require(std::isfinite(val) && val >= 0.0, ErrorKind::Input, "potential",
            "sampled potential must be finite and nonnegative");
    pts.push_back(x);
    vals.push_back(val);
  }
  require(!pts.empty(), ErrorKind::Input, "potential", "empty potential CSV");
  Potential v;
  v.name = "csv";
  v.g_invariant = false;
  double lo = pts[0](0), hi = pts[0](0);
  for (const auto& p : pts) {
    lo = std::min(lo, p.minCoeff());
    hi = std::max(hi, p.maxCoeff());
  }
  if (dim == 1) {
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a](0) < pts[b](0); });
    std::vector<double> xs, ys;
    for (auto i : order) {
      xs.push_back(pts[i](0));
      ys.push_back(vals[i]);
    }
    v.fn = [xs, ys](const Vec& x) {
      const double t = x(0);
      if (t < xs.front() || t > xs.back()) return 0.0;
      auto it = std::upper_bound(xs.begin(), xs.end(), t);
      if (it == xs.end()) return ys.back();
      const auto i = static_cast<std::size_t>(it - xs.begin());
      if (i == 0) return ys.front();
      const double a = (t - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return (1 - a) * ys[i - 1] + a * ys[i];
    };
  } else {
    v.fn = [pts, vals, lo, hi](const Vec& x) {
      if (x.minCoeff() < lo || x.maxCoeff() > hi) return 0.0;
      std::size_t best = 0;
      double bd = (pts[0] - x).squaredNorm();
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const double dd = (pts[i] - x).squaredNorm();
        if (dd < bd) {
          bd = dd;
          best = i;
        }
      }
      return vals[best];
    };
  }
  v.support = std::sqrt(static_cast<double>(dim)) * std::max(std::abs(lo), std::abs(hi));
  return v;
}

Vec sample_potential(const Potential& v, const QuadratureGrid& g) {
  Vec out(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double val = v(g.nodes[i]);
    require(std::isfinite(val) && val >= 0.0, ErrorKind::Input, "potential",
            "potential '" + v.name + "' is negative or infinite on the grid");
    out(static_cast<Eigen::Index>(i)) = val;
  }
  return out;
}

}  // namespace dunkl
