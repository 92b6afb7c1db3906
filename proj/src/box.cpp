#include "dunkl/box.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/bessel.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "dunkl/error.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

BoxAxis box_axis(double kappa, const std::vector<double>& nodes, const std::vector<double>& mu,
                 double R, const BoxOptions& opts) {
  require(opts.fraction > 0.0 && opts.penalty_factor >= 1.0, ErrorKind::Input, "schrodinger",
          "bad box options");
  const int n = static_cast<int>(nodes.size());
  const double cut = opts.fraction * n / R;
  std::vector<Vec> cols;
  std::vector<double> l2;
  for (int parity = 0; parity < 2; ++parity) {
    const double nu = parity == 0 ? kappa - 0.5 : kappa + 0.5;
    for (int z = 1;; ++z) {
      const double lam = boost::math::cyl_bessel_j_zero(nu, z) / R;
      if (lam > cut) break;
      Vec c(n);
      for (int m = 0; m < n; ++m) {
        const double x = nodes[m];
        const double v = normalized_bessel(nu, lam * x);
        c(m) = std::sqrt(mu[m]) * (parity == 0 ? v : x * v);
      }
      cols.push_back(c / c.norm());
      l2.push_back(lam * lam);
    }
  }
  BoxAxis out;
  const int M = static_cast<int>(cols.size());
  require(M > 0 && M < n, ErrorKind::Numerical, "schrodinger", "box basis is empty or overfull");
  Mat B(n, M);
  out.lambda2.resize(M);
  for (int i = 0; i < M; ++i) {
    B.col(i) = cols[i];
    out.lambda2(i) = l2[i];
  }
  const Mat G = B.transpose() * B;
  out.orthogonality_defect = (G - Mat::Identity(M, M)).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Mat> es(G);
  require(es.info() == Eigen::Success && es.eigenvalues().minCoeff() > 0.5, ErrorKind::Numerical,
          "schrodinger", "box modes are not resolved by the grid");
  out.basis = B * es.operatorInverseSqrt();
  out.cutoff2 = cut * cut;
  out.penalty = opts.penalty_factor * cut * cut;
  return out;
}

Mat kron_axes(const std::vector<Mat>& factors) {
  Mat out = factors[0];
  for (std::size_t j = 1; j < factors.size(); ++j) {
    Mat next = Eigen::kroneckerProduct(out, factors[j]).eval();
    out.swap(next);
  }
  return out;
}

Vec apply_axes(const std::vector<Mat>& factors, const Vec& f) {
  if (factors.size() == 1) return factors[0] * f;
  require(factors.size() == 2, ErrorKind::Capability, "schrodinger", "d > 2 is not supported");
  const auto n0 = factors[0].rows(), n1 = factors[1].rows();
  // flat index i0 * n1 + i1 is column-major storage of an n1 x n0 matrix
  Eigen::Map<const Mat> m(f.data(), n1, n0);
  Mat r = factors[1] * m * factors[0].transpose();
  return Eigen::Map<const Vec>(r.data(), r.size());
}

BoxLaplacian::BoxLaplacian(std::shared_ptr<const QuadratureGrid> grid, const BoxOptions& opts)
    : grid_(std::move(grid)), opts_(opts) {
  const auto& k = grid_->rs.axis_multiplicities();
  for (int j = 0; j < grid_->dim; ++j)
    axes_.push_back(box_axis(k[j], grid_->axis_nodes[j], grid_->axis_mu[j], grid_->R, opts_));
}

Mat BoxLaplacian::similarity() const {
  std::vector<Mat> s;
  for (const auto& a : axes_) {
    const auto n = a.basis.rows();
    Mat m = a.basis * a.lambda2.asDiagonal() * a.basis.transpose() +
            a.penalty * (Mat::Identity(n, n) - a.basis * a.basis.transpose());
    s.push_back(0.5 * (m + m.transpose()));
  }
  if (s.size() == 1) return s[0];
  const auto n0 = s[0].rows(), n1 = s[1].rows();
  return kron_axes({s[0], Mat::Identity(n1, n1)}) + kron_axes({Mat::Identity(n0, n0), s[1]});
}

std::vector<Mat> BoxLaplacian::axis_heat(double t) const {
  std::vector<Mat> out;
  for (const auto& a : axes_) {
    const auto n = a.basis.rows();
    const Vec e = (-t * a.lambda2.array()).exp().matrix();
    Mat m = a.basis * e.asDiagonal() * a.basis.transpose() +
            std::exp(-t * a.penalty) * (Mat::Identity(n, n) - a.basis * a.basis.transpose());
    out.push_back(0.5 * (m + m.transpose()));
  }
  return out;
}

Mat BoxLaplacian::heat_similarity(double t) const {
  require(t >= 0.0, ErrorKind::Input, "schrodinger", "time must be nonnegative");
  return kron_axes(axis_heat(t));
}

Vec BoxLaplacian::heat_apply(double t, const Vec& f) const {
  require(t >= 0.0, ErrorKind::Input, "schrodinger", "time must be nonnegative");
  if (t == 0.0) return f;
  const Vec s = grid_->mu.array().sqrt().matrix();
  const Vec h = apply_axes(axis_heat(t), Vec(f.cwiseProduct(s)));
  return h.cwiseQuotient(s);
}

Vec BoxLaplacian::project(const Vec& f) const {
  std::vector<Mat> p;
  for (const auto& a : axes_) p.push_back(a.basis * a.basis.transpose());
  const Vec s = grid_->mu.array().sqrt().matrix();
  return apply_axes(p, Vec(f.cwiseProduct(s))).cwiseQuotient(s);
}

Mat BoxLaplacian::heat_kernel(double t) const {
  require(t > 0.0, ErrorKind::Input, "schrodinger", "time must be positive");
  Mat m = heat_similarity(t);
  const Vec s = grid_->mu.array().sqrt().matrix();
  return s.cwiseInverse().asDiagonal() * m * s.cwiseInverse().asDiagonal();
}

}  // namespace dunkl
