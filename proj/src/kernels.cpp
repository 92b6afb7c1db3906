#include "dunkl/kernels.hpp"

#include <cmath>

#include "dunkl/special.hpp"

namespace dunkl {

Eigen::MatrixXcd axis_transform_matrix(double kappa, const std::vector<double>& nodes,
                                       const std::vector<double>& mu, double c, Exec exec) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd phi(n, n);
  auto row = [&](Eigen::Index r) {
    for (Eigen::Index m = 0; m < n; ++m)
      phi(r, m) = kernel_imag(kappa, -nodes[m] * nodes[r]) * (mu[m] / c);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (Eigen::Index r = 0; r < n; ++r) row(r);
  } else {
    for (Eigen::Index r = 0; r < n; ++r) row(r);
  }
  return phi;
}

namespace {

template <class M, class V>
V apply_rows(const M& m, const V& v, Exec exec) {
  V out(m.rows());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      typename V::Scalar s = 0.0;
      for (Eigen::Index c = 0; c < m.cols(); ++c) s += m(r, c) * v(c);
      out(r) = s;
    }
  } else {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      typename V::Scalar s = 0.0;
      for (Eigen::Index c = 0; c < m.cols(); ++c) s += m(r, c) * v(c);
      out(r) = s;
    }
  }
  return out;
}

}  // namespace

Eigen::VectorXcd apply_dense(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v, Exec exec) {
  return apply_rows(m, v, exec);
}

Eigen::VectorXd apply_dense(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, Exec exec) {
  return apply_rows(m, v, exec);
}

double axis_heat(double kappa, double t, double x, double y) {
  // 1/(c (2t)^{kappa+1/2}) e^{-(|x|-|y|)^2/4t} e^{-|z|}E(z), z = x y / 2t
  const double c = axis_gaussian_mass(kappa);
  const double d = std::abs(x) - std::abs(y);
  return std::exp(-d * d / (4.0 * t) - (kappa + 0.5) * std::log(2.0 * t)) / c *
         kernel_damped(kappa, x * y / (2.0 * t));
}

Eigen::MatrixXd axis_heat_table(double kappa, double t, const std::vector<double>& x,
                                const std::vector<double>& y, Exec exec) {
  const auto nx = static_cast<Eigen::Index>(x.size());
  const auto ny = static_cast<Eigen::Index>(y.size());
  Eigen::MatrixXd k(nx, ny);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < nx; ++i)
      for (Eigen::Index j = 0; j < ny; ++j) k(i, j) = axis_heat(kappa, t, x[i], y[j]);
  } else {
    for (Eigen::Index i = 0; i < nx; ++i)
      for (Eigen::Index j = 0; j < ny; ++j) k(i, j) = axis_heat(kappa, t, x[i], y[j]);
  }
  return k;
}

}  // namespace dunkl
