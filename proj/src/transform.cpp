#include "dunkl/transform.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "dunkl/error.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

double macdonald_constant(const RootSystem& rs) {
  require(rs.kind() == GroupKind::Z2Product, ErrorKind::Capability, "transform",
          "closed-form constant is available for Z2 products only");
  double c = 1.0;
  for (double k : rs.axis_multiplicities()) c *= axis_gaussian_mass(k);
  return c;
}

namespace {

std::filesystem::path cache_path(double kappa, const QuadratureGrid& g) {
  const char* dir = std::getenv("DUNKLKIT_CACHE");
  if (dir == nullptr || *dir == '\0') return {};
  char name[160];
  std::snprintf(name, sizeof name, "phi_k%.17g_R%.17g_N%d_p%d.bin", kappa, g.R, g.n_axis,
                g.panels);
  return std::filesystem::path(dir) / name;
}

bool load_cached(const std::filesystem::path& p, CMat& m, Eigen::Index n) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::int64_t stored = 0;
  in.read(reinterpret_cast<char*>(&stored), sizeof stored);
  if (!in || stored != n) return false;
  m.resize(n, n);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(std::complex<double>) * n * n));
  return static_cast<bool>(in);
}

void store_cached(const std::filesystem::path& p, const CMat& m) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    const std::int64_t n = m.rows();
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(m.data()),
              static_cast<std::streamsize>(sizeof(std::complex<double>) * n * n));
  }
  std::filesystem::rename(tmp, p, ec);
}

}  // namespace

SpectralMatrix::SpectralMatrix(std::shared_ptr<const QuadratureGrid> grid)
    : grid_(std::move(grid)) {
  require(grid_ != nullptr, ErrorKind::Input, "transform", "null grid");
  require(grid_->dim <= 2, ErrorKind::Capability, "transform",
          "transforms are supported for d <= 2");
  c_ = macdonald_constant(grid_->rs);
  const auto& k = grid_->rs.axis_multiplicities();
  for (int j = 0; j < grid_->dim; ++j) {
    const double cj = axis_gaussian_mass(k[j]);
    CMat phi;
    const auto path = cache_path(k[j], *grid_);
    if (path.empty() || !load_cached(path, phi, grid_->n_axis)) {
      phi = axis_transform_matrix(k[j], grid_->axis_nodes[j], grid_->axis_mu[j], cj);
      if (!path.empty()) store_cached(path, phi);
    }
    Eigen::VectorXd s(grid_->n_axis);
    for (int i = 0; i < grid_->n_axis; ++i) s(i) = std::sqrt(grid_->axis_mu[j][i]);
    CMat u = s.asDiagonal() * phi * s.cwiseInverse().asDiagonal();
    phi_.push_back(std::move(phi));
    u_.push_back(std::move(u));
  }
}

CMat SpectralMatrix::dense() const {
  CMat m = phi_[0];
  for (int j = 1; j < grid_->dim; ++j) m = Eigen::kroneckerProduct(m, phi_[j]).eval();
  return m;
}

CVec SpectralMatrix::apply_axes(const std::vector<CMat>& mats, const CVec& f) const {
  require(static_cast<std::size_t>(f.size()) == grid_->size(), ErrorKind::Input, "transform",
          "sample length does not match the grid");
  if (grid_->dim == 1) return apply_dense(mats[0], f);
  const auto n = grid_->n_axis;
  Eigen::Map<const CMat> m(f.data(), n, n);
  CMat r = mats[1] * m * mats[0].transpose();
  return Eigen::Map<CVec>(r.data(), r.size());
}

CVec SpectralMatrix::forward(const CVec& f) const { return apply_axes(phi_, f); }

CVec SpectralMatrix::inverse(const CVec& g) const {
  const CVec h = forward(g);
  CVec out(h.size());
  for (Eigen::Index i = 0; i < h.size(); ++i) out(i) = h(grid_->negation[i]);
  return out;
}

Vec SpectralMatrix::symbol() const {
  Vec s(static_cast<Eigen::Index>(grid_->size()));
  for (std::size_t i = 0; i < grid_->size(); ++i)
    s(static_cast<Eigen::Index>(i)) = grid_->nodes[i].squaredNorm();
  return s;
}

Mat SpectralMatrix::separable_similarity(
    const std::vector<std::function<double(double)>>& factors) const {
  require(static_cast<int>(factors.size()) == grid_->dim, ErrorKind::Input, "transform",
          "one multiplier factor per axis");
  CMat total;
  for (int j = 0; j < grid_->dim; ++j) {
    Eigen::VectorXd m(grid_->n_axis);
    for (int i = 0; i < grid_->n_axis; ++i) m(i) = factors[j](grid_->axis_nodes[j][i]);
    CMat h = u_[j].adjoint() * m.asDiagonal() * u_[j];
    total = j == 0 ? h : Eigen::kroneckerProduct(total, h).eval();
  }
  Mat r = total.real();
  return 0.5 * (r + r.transpose());
}

Mat SpectralMatrix::laplacian_similarity() const {
  Mat s = Mat::Zero(static_cast<Eigen::Index>(grid_->size()),
                    static_cast<Eigen::Index>(grid_->size()));
  for (int j = 0; j < grid_->dim; ++j) {
    std::vector<std::function<double(double)>> f(grid_->dim, [](double) { return 1.0; });
    f[j] = [](double x) { return x * x; };
    s += separable_similarity(f);
  }
  return s;
}

Mat SpectralMatrix::heat_similarity(double t) const {
  require(t >= 0.0, ErrorKind::Input, "heat", "time must be nonnegative");
  std::vector<std::function<double(double)>> f(
      grid_->dim, [t](double x) { return std::exp(-t * x * x); });
  return separable_similarity(f);
}

CVec dunkl_transform(const SpectralMatrix& sm, const CVec& f) { return sm.forward(f); }

CVec inverse_transform(const SpectralMatrix& sm, const CVec& g) { return sm.inverse(g); }

double parseval_defect(const SpectralMatrix& sm, const CVec& f, const CVec& g) {
  const auto& grid = sm.grid();
  return std::abs(inner(grid, f, g) - inner(grid, sm.forward(f), sm.forward(g)));
}

Vec translate_radial(const QuadratureGrid& g, const Vec& x,
                     const std::function<double(double)>& profile, int nu_nodes) {
  const auto m = nu_quadrature(g.rs, x, nu_nodes);
  const double x2 = x.squaredNorm();
  const auto n = static_cast<Eigen::Index>(g.size());
  Vec out(n);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec& y = g.nodes[i];
    const double base = y.squaredNorm() + x2;
    double s = 0.0;
    for (std::size_t q = 0; q < m.nodes.size(); ++q)
      s += m.weights[q] * profile(std::sqrt(std::max(0.0, base + 2.0 * y.dot(m.nodes[q]))));
    out(i) = s;
  }
  return out;
}

CVec convolve(const SpectralMatrix& sm, const CVec& f, const CVec& g) {
  return sm.inverse(sm.forward(f).cwiseProduct(sm.forward(g)));
}

GridSelfTest self_test(const SpectralMatrix& sm) {
  const auto& g = sm.grid();
  const Vec gauss = sample(g, [](const Vec& x) { return std::exp(-0.5 * x.squaredNorm()); });
  GridSelfTest r;
  r.gaussian_mass_error = std::abs(integrate(g, gauss) - sm.c_k()) / sm.c_k();
  const CVec f = gauss.cast<std::complex<double>>();
  r.gaussian_transform_error = (sm.forward(f) - f).cwiseAbs().maxCoeff();
  r.roundtrip_error = (sm.inverse(sm.forward(f)) - f).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace dunkl
