#pragma once

#include "dunkl/transform.hpp"

namespace dunkl {

struct DunklDerivativeStencil {
  Vec direction;        // unit vector xi
  int fd_order = 6;     // 2, 4 or 6
  double guard = -1.0;  // hyperplane guard; negative selects half the minimal node distance
};

/// Finite-difference weights for the first derivative at x0 from points xs
/// (Fornberg's recursion).
std::vector<double> fd_weights(double x0, const std::vector<double>& xs);

/// d/dx_j on the grid, one-sided windows near the boundary.
CVec partial_derivative(const QuadratureGrid& g, int axis, const CVec& f, int order = 6);

/// T_xi f = d_xi f + sum_alpha k(alpha) <alpha, xi> (f(x) - f(sigma_alpha x)) / <alpha, x>.
CVec dunkl_derivative(const QuadratureGrid& g, const DunklDerivativeStencil& s, const CVec& f);
/// T_j = T_{e_j}.
CVec dunkl_derivative(const QuadratureGrid& g, int axis, const CVec& f, int order = 6);

/// sum_j T_j T_j f.
CVec dunkl_laplacian(const QuadratureGrid& g, const CVec& f, int order = 6);

/// -F^{-1}(|xi|^2 F f).
CVec spectral_laplacian(const SpectralMatrix& sm, const CVec& f);

/// |<T_j f, h> + <f, T_j h>| in L^2(mu_k).
double antisymmetry_defect(const QuadratureGrid& g, int axis, const CVec& f, const CVec& h,
                           int order = 6);

/// ||F(T_j f) - i xi_j F f||_2.
double multiplier_defect(const SpectralMatrix& sm, int axis, const CVec& f, int order = 6);

/// Mask of nodes with every |x_j| <= fraction R.
std::vector<bool> interior_mask(const QuadratureGrid& g, double fraction = 0.8);

}  // namespace dunkl

namespace dunkl {

/// Empirical constants for |T_j^2 phi(., y)| <= C phi(., y) (C_square) and
/// |(T_j phi(x, y) - T_j phi(sigma x, y)) / <x, alpha>| <= C phi(x, y)
/// (C_divided, max over positive roots), over the interior nodes.
struct PhiBoundReport {
  double C_square = 0.0;
  double C_divided = 0.0;
  int nodes = 0;
};

PhiBoundReport phi_bound_report(const QuadratureGrid& g, const Vec& y, int axis, int nu_nodes = 32,
                                double interior = 0.8);

/// |int T_j f f T_j phi dmu_k| / int f^2 phi dmu_k for real f.
double phi_energy_ratio(const QuadratureGrid& g, const Vec& y, int axis, const Vec& f,
                        int nu_nodes = 32);

/// The ratio above is at most (C_square + 2 sum_alpha k(alpha) |alpha_j| C_divided) / 2,
/// by the reflection integration-by-parts identity.
double phi_energy_bound(const RootSystem& rs, int axis, const PhiBoundReport& r);

}  // namespace dunkl
