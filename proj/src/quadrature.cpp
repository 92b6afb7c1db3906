#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "dunkl/error.hpp"

namespace dunkl {

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  require(n >= 1, ErrorKind::Input, "quadrature", "rule needs at least one node");
  require(alpha > -1.0 && beta > -1.0, ErrorKind::Input, "quadrature",
          "Jacobi exponents must exceed -1");

  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 1));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(k - 1) = std::sqrt(b2);
  }

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off.head(n - 1), Eigen::ComputeEigenvectors);
  require(es.info() == Eigen::Success, ErrorKind::Numerical, "quadrature",
          "Golub-Welsch eigenproblem did not converge");
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto rule = gauss_jacobi(n, 0.0, 0.0);
  cache.emplace(n, rule);
  return rule;
}

namespace {

void panel(QuadratureRule& out, double a, double b, const QuadratureRule& gl) {
  const double h = 0.5 * (b - a);
  const double m = 0.5 * (b + a);
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    out.nodes.push_back(m + h * gl.nodes[i]);
    out.weights.push_back(std::abs(h) * gl.weights[i]);
  }
}

void regular(QuadratureRule& out, double a, double b, const QuadratureRule& gl, int panels) {
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) panel(out, a + p * h, a + (p + 1) * h, gl);
}

// Covers [s, s + len] (len may be negative) grading toward s.
void graded(QuadratureRule& out, double s, double len, const QuadratureRule& gl,
            const IntegrationOptions& opts) {
  double outer = len;
  while (std::abs(outer) > opts.floor) {
    const double inner = outer * opts.grading;
    panel(out, s + inner, s + outer, gl);
    outer = inner;
  }
}

}  // namespace

QuadratureRule composite_rule(double a, double b, std::span<const double> breaks,
                              std::span<const double> singular, const IntegrationOptions& opts) {
  QuadratureRule out;
  if (a >= b) return out;
  std::vector<double> pts{a, b};
  for (double p : breaks)
    if (p > a && p < b) pts.push_back(p);
  for (double p : singular)
    if (p > a && p < b) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-15; }),
            pts.end());

  auto is_singular = [&](double p) {
    return std::any_of(singular.begin(), singular.end(),
                       [&](double s) { return std::abs(s - p) < 1e-15; });
  };

  const auto& gl = gauss_legendre(opts.points);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double p = pts[i];
    const double q = pts[i + 1];
    const bool sp = is_singular(p);
    const bool sq = is_singular(q);
    // the floor is a true floor: panels never approach a singular point closer
    // than it, however short the subinterval
    if (sp && sq) {
      const double m = 0.5 * (p + q);
      graded(out, p, m - p, gl, opts);
      graded(out, q, m - q, gl, opts);
    } else if (sp) {
      graded(out, p, q - p, gl, opts);
    } else if (sq) {
      graded(out, q, p - q, gl, opts);
    } else {
      regular(out, p, q, gl, opts.panels);
    }
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks, std::span<const double> singular,
                 const IntegrationOptions& opts) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, breaks, singular, opts);
  const auto rule = composite_rule(a, b, breaks, singular, opts);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) total += rule.weights[i] * f(rule.nodes[i]);
  return total;
}

}  // namespace dunkl
