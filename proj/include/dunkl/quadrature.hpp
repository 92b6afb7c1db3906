#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dunkl {

/// Nodes ascending on [-1, 1] and positive weights.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-t)^alpha (1+t)^beta, alpha, beta > -1,
/// computed by Golub-Welsch. Exact for polynomials of degree 2n-1.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);
QuadratureRule gauss_legendre(int n);

struct IntegrationOptions {
  int points = 16;        // Gauss-Legendre points per panel
  int panels = 4;         // panels per regular subinterval
  double grading = 0.15;  // geometric ratio toward singular endpoints
  double floor = 1e-12;   // distance from a singular point below which nothing is integrated
};

/// The nodes and weights integrate() uses on [a, b], a < b.
QuadratureRule composite_rule(double a, double b, std::span<const double> breaks = {},
                              std::span<const double> singular = {},
                              const IntegrationOptions& opts = {});

/// Integrates f over [a, b]. The interval is split at every point of `breaks`
/// and `singular` inside it; subintervals ending at a singular point are
/// geometrically graded toward it, down to `floor`. Divergent singularities
/// therefore give finite, floor-dependent values.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks = {}, std::span<const double> singular = {},
                 const IntegrationOptions& opts = {});

}  // namespace dunkl
