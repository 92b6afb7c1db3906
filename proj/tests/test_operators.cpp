#include "doctest.h"

#include <cmath>

#include "dunkl/intertwine.hpp"
#include "dunkl/operators.hpp"

using namespace dunkl;

namespace {

CVec sample_c(const QuadratureGrid& g, const std::function<double(const Vec&)>& f) {
  return sample(g, f).cast<std::complex<double>>();
}

double interior_max(const QuadratureGrid& g, const CVec& f, double fraction = 0.8) {
  const auto mask = interior_mask(g, fraction);
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (mask[i]) m = std::max(m, std::abs(f(static_cast<Eigen::Index>(i))));
  return m;
}

}  // namespace

TEST_CASE("finite-difference weights") {
  const auto w = fd_weights(0.0, {-1.0, 0.0, 1.0});
  CHECK(w[0] == doctest::Approx(-0.5));
  CHECK(std::abs(w[1]) < 1e-15);
  CHECK(w[2] == doctest::Approx(0.5));
  // exact on cubics with four points
  const std::vector<double> xs{-0.3, 0.1, 0.4, 1.2};
  const auto c = fd_weights(0.2, xs);
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d += c[i] * xs[i] * xs[i] * xs[i];
  CHECK(d == doctest::Approx(3 * 0.04).epsilon(1e-12));
}

TEST_CASE("Dunkl derivative of x") {
  for (double k : {0.0, 0.5, 1.5}) {
    const auto g = build_grid(RootSystem::z2_product({k}), 6.0, 64);
    const CVec f = sample_c(*g, [](const Vec& x) { return x(0); });
    const CVec t = dunkl_derivative(*g, 0, f);
    CHECK(interior_max(*g, t - CVec::Constant(t.size(), 1.0 + 2 * k)) < 1e-8);
  }
}

TEST_CASE("kappa = 0 Dunkl derivative is the partial derivative") {
  const auto g = build_grid(RootSystem::z2_product({0.0, 0.0}), 5.0, 32);
  const CVec f = sample_c(*g, [](const Vec& x) { return std::sin(x(0)) * std::exp(-x(1) * x(1) / 4); });
  CHECK((dunkl_derivative(*g, 0, f) - partial_derivative(*g, 0, f)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("kernel is a joint eigenfunction") {
  for (double k : {0.5, 1.5}) {
    const auto rs = RootSystem::z2_product({k});
    const auto g = build_grid(rs, 4.0, 128);
    for (double yv : {0.5, 1.0, 2.0}) {
      Vec y(1);
      y << yv;
      const CVec e = sample_c(*g, [&](const Vec& x) { return dunkl_kernel(rs, x, y); });
      const CVec res = dunkl_derivative(*g, 0, e) - yv * e;
      CHECK(interior_max(*g, res) / interior_max(*g, e) < 1e-4);
    }
  }
}

TEST_CASE("Laplacian of the imaginary kernel") {
  const auto rs = RootSystem::z2_product({0.5});
  const auto g = build_grid(rs, 4.0, 128);
  Vec y(1);
  y << 1.2;
  CVec e(static_cast<Eigen::Index>(g->size()));
  for (std::size_t i = 0; i < g->size(); ++i)
    e(static_cast<Eigen::Index>(i)) = dunkl_kernel_imag(rs, g->nodes[i], y);
  const CVec res = dunkl_laplacian(*g, e) + 1.44 * e;
  CHECK(interior_max(*g, res, 0.6) < 1e-4);
}

TEST_CASE("Dunkl derivative is antisymmetric") {
  // sixth-order stencils need about 16 nodes per unit length for this pair
  const auto g = build_grid(RootSystem::z2_product({0.5, 1.0}), 8.0, 128);
  const CVec f = sample_c(*g, [](const Vec& x) { return std::exp(-x.squaredNorm() / 2) * (1 + x(0)); });
  const CVec h = sample_c(*g, [](const Vec& x) { return std::exp(-(x - Vec::Ones(2)).squaredNorm()); });
  CHECK(antisymmetry_defect(*g, 0, f, h) < 1e-5);
  CHECK(antisymmetry_defect(*g, 1, f, h) < 1e-5);
}

TEST_CASE("derivative is a multiplier on the transform side") {
  SpectralMatrix sm(build_grid(RootSystem::z2_product({0.5}), 10.0, 128));
  const CVec f = sample_c(sm.grid(), [](const Vec& x) { return std::exp(-x.squaredNorm() / 2); });
  CHECK(multiplier_defect(sm, 0, f) < 1e-4);
}

TEST_CASE("grid and spectral Laplacians agree") {
  SpectralMatrix sm(build_grid(RootSystem::z2_product({1.5}), 10.0, 128));
  const auto& g = sm.grid();
  const CVec f = sample_c(g, [](const Vec& x) { return std::exp(-x.squaredNorm() / 2); });
  CHECK(interior_max(g, dunkl_laplacian(g, f) - spectral_laplacian(sm, f)) < 1e-4);
}

TEST_CASE("phi energy ratio stays under its bound") {
  const auto rs = RootSystem::z2_product({0.5});
  const auto g = build_grid(rs, 4.0, 64);
  Vec y(1);
  y << 0.7;
  const auto rep = phi_bound_report(*g, y, 0);
  CHECK(rep.nodes > 0);
  const Vec f = sample(*g, [](const Vec& x) { return std::exp(-x.squaredNorm()) * (1 + x(0)); });
  CHECK(phi_energy_ratio(*g, y, 0, f) <= phi_energy_bound(rs, 0, rep));
}
