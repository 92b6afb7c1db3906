#include "dunkl/intertwine.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "dunkl/error.hpp"

namespace dunkl {

const QuadratureRule& nu_rule(double kappa, int n) {
  require(kappa > 0.0, ErrorKind::Input, "intertwine", "nu rule needs kappa > 0");
  require(n >= 2, ErrorKind::Input, "intertwine", "nu rule needs at least two nodes");
  static std::mutex mu;
  static std::map<std::pair<double, int>, QuadratureRule> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kappa, n);
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  // (1+t)(1-t^2)^{kappa-1} = (1-t)^{kappa-1} (1+t)^kappa
  QuadratureRule r = gauss_jacobi(n, kappa - 1.0, kappa);
  double s = 0.0;
  for (double w : r.weights) s += w;
  for (double& w : r.weights) w /= s;
  return table.emplace(key, std::move(r)).first->second;
}

namespace {

AxisMeasure axis_nu(double kappa, double x, int n) {
  AxisMeasure a;
  if (kappa == 0.0) {
    a.nodes = {x};
    a.weights = {1.0};
    return a;
  }
  const auto& r = nu_rule(kappa, n);
  a.nodes.reserve(r.nodes.size());
  for (double t : r.nodes) a.nodes.push_back(x * t);
  a.weights = r.weights;
  return a;
}

void require_z2(const RootSystem& rs) {
  require(rs.kind() == GroupKind::Z2Product, ErrorKind::Capability, "intertwine",
          "explicit intertwining measure is available only for Z2 products");
}

}  // namespace

OrbitMeasureQuad nu_quadrature(const RootSystem& rs, const Vec& x, int n) {
  require_z2(rs);
  require(x.size() == rs.dimension(), ErrorKind::Input, "intertwine", "dimension mismatch");
  require(n >= 2, ErrorKind::Input, "intertwine", "node count must be at least 2");
  const auto& k = rs.axis_multiplicities();
  const int d = rs.dimension();
  std::vector<AxisMeasure> axes;
  for (int j = 0; j < d; ++j) axes.push_back(axis_nu(k[j], x(j), n));

  OrbitMeasureQuad m;
  m.base = x;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    Vec p(d);
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      p(j) = axes[j].nodes[idx[j]];
      w *= axes[j].weights[idx[j]];
    }
    m.nodes.push_back(std::move(p));
    m.weights.push_back(w);
    int j = 0;
    while (j < d && ++idx[j] == axes[j].nodes.size()) idx[j++] = 0;
    if (j == d) break;
  }
  return m;
}

double intertwining_apply(const OrbitMeasureQuad& m,
                          const std::function<double(const Vec&)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) s += m.weights[i] * f(m.nodes[i]);
  return s;
}

double dunkl_kernel(const RootSystem& rs, const Vec& x, const Vec& y, KernelMethod method,
                    int nu_nodes) {
  require_z2(rs);
  require(x.size() == rs.dimension() && y.size() == rs.dimension(), ErrorKind::Input,
          "intertwine", "dimension mismatch");
  const auto& k = rs.axis_multiplicities();
  double e = 1.0;
  for (int j = 0; j < rs.dimension(); ++j) {
    const double z = x(j) * y(j);
    switch (method) {
      case KernelMethod::Closed:
        e *= kernel(k[j], z);
        break;
      case KernelMethod::Series:
        e *= kernel_series(k[j], z);
        break;
      case KernelMethod::Quadrature: {
        const auto a = axis_nu(k[j], x(j), nu_nodes);
        double s = 0.0;
        for (std::size_t i = 0; i < a.nodes.size(); ++i)
          s += a.weights[i] * std::exp(a.nodes[i] * y(j));
        e *= s;
        break;
      }
    }
  }
  return e;
}

std::complex<double> dunkl_kernel_imag(const RootSystem& rs, const Vec& x, const Vec& y,
                                       KernelMethod method, int nu_nodes) {
  require_z2(rs);
  require(x.size() == rs.dimension() && y.size() == rs.dimension(), ErrorKind::Input,
          "intertwine", "dimension mismatch");
  const auto& k = rs.axis_multiplicities();
  std::complex<double> e = 1.0;
  for (int j = 0; j < rs.dimension(); ++j) {
    const double w = x(j) * y(j);
    switch (method) {
      case KernelMethod::Closed:
        e *= kernel_imag(k[j], w);
        break;
      case KernelMethod::Series:
        e *= kernel_series_imag(k[j], w);
        break;
      case KernelMethod::Quadrature: {
        const auto a = axis_nu(k[j], x(j), nu_nodes);
        std::complex<double> s = 0.0;
        for (std::size_t i = 0; i < a.nodes.size(); ++i)
          s += a.weights[i] * std::exp(std::complex<double>(0.0, a.nodes[i] * y(j)));
        e *= s;
        break;
      }
    }
  }
  return e;
}

std::vector<AxisMeasure> symmetrized_nu(const RootSystem& rs, const Vec& y, int n) {
  require_z2(rs);
  const auto& k = rs.axis_multiplicities();
  std::vector<AxisMeasure> out;
  for (int j = 0; j < rs.dimension(); ++j) {
    AxisMeasure plus = axis_nu(k[j], y(j), n);
    if (k[j] == 0.0) {
      out.push_back(std::move(plus));  // sign flip of this axis is not in the active group
      continue;
    }
    AxisMeasure a;
    for (std::size_t i = 0; i < plus.nodes.size(); ++i) {
      a.nodes.push_back(plus.nodes[i]);
      a.weights.push_back(0.5 * plus.weights[i]);
      a.nodes.push_back(-plus.nodes[i]);
      a.weights.push_back(0.5 * plus.weights[i]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

PhiEvaluation phi(const RootSystem& rs, const Vec& x, const Vec& y, double lambda,
                  int nu_nodes) {
  require(lambda > 0.0, ErrorKind::Input, "intertwine", "phi exponent must be positive");
  require(x.size() == rs.dimension() && y.size() == rs.dimension(), ErrorKind::Input,
          "intertwine", "dimension mismatch");
  const auto axes = symmetrized_nu(rs, y, nu_nodes);
  const int d = rs.dimension();
  const double base = x.squaredNorm() + y.squaredNorm();

  PhiEvaluation out;
  out.base = y;
  out.argument = x;
  out.lambda = lambda;
  double s = 0.0;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    double w = 1.0;
    double dot = 0.0;
    for (int j = 0; j < d; ++j) {
      w *= axes[j].weights[idx[j]];
      dot += x(j) * axes[j].nodes[idx[j]];
    }
    double a2 = base - 2.0 * dot;
    if (a2 < 0.0) {
      ++out.clamped;
      a2 = 0.0;
    }
    s += w * std::exp(std::sqrt(1.0 + a2));
    int j = 0;
    while (j < d && ++idx[j] == axes[j].nodes.size()) idx[j++] = 0;
    if (j == d) break;
  }
  out.value = lambda == 1.0 ? s : std::pow(s, lambda);
  return out;
}

}  // namespace dunkl
