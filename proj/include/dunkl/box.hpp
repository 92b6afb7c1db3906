#pragma once

#include <memory>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl {

struct BoxOptions {
  double fraction = 0.7;        // keep modes with lambda <= fraction * N / R
  double penalty_factor = 50.0; // eigenvalue given to the unresolved complement, times lambda_cut^2
};

/// One axis of the Dirichlet Dunkl Laplacian on [-R, R] with multiplicity
/// kappa. Eigenfunctions are j_{kappa-1/2}(lambda x) (lambda a zero of
/// J_{kappa-1/2} over R) and x j_{kappa+1/2}(lambda x) (zeros of J_{kappa+1/2}),
/// eigenvalue lambda^2. Columns of `basis` hold sqrt(mu) * mode, orthonormal
/// after a Loewdin correction.
struct BoxAxis {
  Mat basis;
  Vec lambda2;
  double cutoff2 = 0.0;
  double penalty = 0.0;
  double orthogonality_defect = 0.0;  // before the Loewdin step
  int size() const { return static_cast<int>(lambda2.size()); }
};

BoxAxis box_axis(double kappa, const std::vector<double>& nodes, const std::vector<double>& mu,
                 double R, const BoxOptions& opts = {});

/// Free operator A_k on the grid, in the symmetric form D^{1/2} A D^{-1/2}
/// (D the mu_k weights): per axis B Lambda B^T + penalty (I - B B^T),
/// Kronecker sum over axes.
class BoxLaplacian {
 public:
  BoxLaplacian(std::shared_ptr<const QuadratureGrid> grid, const BoxOptions& opts = {});

  const QuadratureGrid& grid() const { return *grid_; }
  std::shared_ptr<const QuadratureGrid> grid_ptr() const { return grid_; }
  const BoxOptions& options() const { return opts_; }
  const BoxAxis& axis(int j) const { return axes_[j]; }

  Mat similarity() const;
  /// e^{-t A} in the symmetric form.
  Mat heat_similarity(double t) const;
  /// e^{-t A} f on plain samples.
  Vec heat_apply(double t, const Vec& f) const;
  /// Orthogonal projection (in L^2(mu_k)) onto the span of the resolved modes.
  Vec project(const Vec& f) const;
  /// Kernel of e^{-t A}: entries (e^{-tA})_{mn} / sqrt(mu_m mu_n).
  Mat heat_kernel(double t) const;

 private:
  std::vector<Mat> axis_heat(double t) const;
  std::shared_ptr<const QuadratureGrid> grid_;
  BoxOptions opts_;
  std::vector<BoxAxis> axes_;
};

/// Kronecker product of per-axis factors, axis 0 slowest.
Mat kron_axes(const std::vector<Mat>& factors);

/// Applies per-axis factors to a flat vector without forming the product.
Vec apply_axes(const std::vector<Mat>& factors, const Vec& f);

}  // namespace dunkl
