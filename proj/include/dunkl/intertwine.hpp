#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dunkl/quadrature.hpp"
#include "dunkl/reflection.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

/// Discretization of the intertwining measure nu_x.
struct OrbitMeasureQuad {
  Vec base;
  std::vector<Vec> nodes;
  std::vector<double> weights;
};

inline constexpr int kDefaultNuNodes = 64;

/// Quadrature for nu_x on a Z2 product. Along an axis with multiplicity
/// kappa > 0 the measure is c (1+t)(1-t^2)^{kappa-1} dt on eta = x t; axes
/// with kappa = 0 carry the point mass at x_j. The full measure is the
/// product over axes.
OrbitMeasureQuad nu_quadrature(const RootSystem& rs, const Vec& x, int n = kDefaultNuNodes);

/// Rank-one rule on [-1, 1] for the density above, weights summing to 1.
/// Shared read-only table per (kappa, n).
const QuadratureRule& nu_rule(double kappa, int n);

double intertwining_apply(const OrbitMeasureQuad& m, const std::function<double(const Vec&)>& f);

enum class KernelMethod { Closed, Series, Quadrature };

/// E_k(x, y) for real y, as a product of rank-one kernels.
double dunkl_kernel(const RootSystem& rs, const Vec& x, const Vec& y,
                    KernelMethod method = KernelMethod::Closed, int nu_nodes = kDefaultNuNodes);

/// E_k(x, i y).
std::complex<double> dunkl_kernel_imag(const RootSystem& rs, const Vec& x, const Vec& y,
                                       KernelMethod method = KernelMethod::Closed,
                                       int nu_nodes = kDefaultNuNodes);

struct PhiEvaluation {
  double value = 0.0;
  Vec base;
  Vec argument;
  double lambda = 1.0;
  int clamped = 0;  // nodes whose radicand was negative round-off
};

/// phi_lambda(x, y): integral of e^{sqrt(1 + A^2)} against the G-averaged
/// measure nu_y^G, raised to lambda, with A^2 = |x|^2 + |y|^2 - 2 <x, eta>.
PhiEvaluation phi(const RootSystem& rs, const Vec& x, const Vec& y, double lambda = 1.0,
                  int nu_nodes = 32);

/// Rank-one pieces of nu_y^G: nodes eta_j and weights per axis. G is the
/// active group, so axes with k_j = 0 keep the point mass at y_j.
struct AxisMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};
std::vector<AxisMeasure> symmetrized_nu(const RootSystem& rs, const Vec& y, int n);

}  // namespace dunkl
