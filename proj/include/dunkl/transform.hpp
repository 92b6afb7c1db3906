#pragma once

#include <functional>
#include <memory>

#include "dunkl/grid.hpp"
#include "dunkl/kernels.hpp"

namespace dunkl {

/// Discrete Dunkl transform on a grid, frequency nodes equal to the spatial
/// nodes. The transform of a Z2 product factorizes over axes, so only the
/// per-axis N x N factors are stored; dense() assembles the full matrix.
class SpectralMatrix {
 public:
  explicit SpectralMatrix(std::shared_ptr<const QuadratureGrid> grid);

  const QuadratureGrid& grid() const { return *grid_; }
  std::shared_ptr<const QuadratureGrid> grid_ptr() const { return grid_; }
  double c_k() const { return c_; }
  const std::vector<Vec>& frequency_nodes() const { return grid_->nodes; }

  /// Phi_j with entries c_j^{-1} E(x_m, -i xi_n) mu_m.
  const CMat& axis_forward(int j) const { return phi_[j]; }
  /// D^{1/2} Phi_j D^{-1/2}: complex symmetric, close to unitary.
  const CMat& axis_unitary(int j) const { return u_[j]; }
  CMat dense() const;

  CVec forward(const CVec& f) const;
  CVec inverse(const CVec& g) const;

  /// |xi|^2 on the frequency grid.
  Vec symbol() const;

  /// Re(U* diag(m(xi)) U) assembled per axis for a separable multiplier
  /// m(xi) = prod_j m_j(xi_j); acts on D^{1/2}-scaled samples.
  Mat separable_similarity(const std::vector<std::function<double(double)>>& factors) const;

  /// Discrete A_k = -Delta_k in the weighted-symmetric form D^{1/2} A D^{-1/2}.
  Mat laplacian_similarity() const;
  /// e^{-t A_k} in the same form.
  Mat heat_similarity(double t) const;

 private:
  CVec apply_axes(const std::vector<CMat>& mats, const CVec& f) const;

  std::shared_ptr<const QuadratureGrid> grid_;
  double c_ = 1.0;
  std::vector<CMat> phi_;
  std::vector<CMat> u_;
};

CVec dunkl_transform(const SpectralMatrix& sm, const CVec& f);
CVec inverse_transform(const SpectralMatrix& sm, const CVec& g);

/// |<f, g> - <F f, F g>| in L^2(mu_k).
double parseval_defect(const SpectralMatrix& sm, const CVec& f, const CVec& g);

/// Dunkl translate tau_x f of a radial function f(y) = profile(|y|), by
/// quadrature against nu_x.
Vec translate_radial(const QuadratureGrid& g, const Vec& x,
                     const std::function<double(double)>& profile, int nu_nodes = 64);

/// F^{-1}(F f . F g).
CVec convolve(const SpectralMatrix& sm, const CVec& f, const CVec& g);

/// The grid's built-in quadrature check: relative error of the Gaussian mass
/// against c_k, and Plancherel/inversion defects on a Gaussian.
struct GridSelfTest {
  double gaussian_mass_error = 0.0;
  double gaussian_transform_error = 0.0;
  double roundtrip_error = 0.0;
};
GridSelfTest self_test(const SpectralMatrix& sm);

/// Product of axis Gaussian masses.
double macdonald_constant(const RootSystem& rs);

}  // namespace dunkl
