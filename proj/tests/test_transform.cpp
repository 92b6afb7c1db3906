#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "dunkl/heat.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

namespace {

CVec gaussian(const QuadratureGrid& g, double s = 1.0, double shift = 0.0) {
  CVec f(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vec x = g.nodes[i];
    x(0) -= shift;
    f(static_cast<Eigen::Index>(i)) = std::exp(-x.squaredNorm() / (2 * s * s));
  }
  return f;
}

double l2(const QuadratureGrid& g, const CVec& f) { return norm(g, f, 2.0); }

}  // namespace

TEST_CASE("grid weights integrate the Gaussian") {
  for (double k : {0.0, 0.5, 1.5}) {
    const auto rs = RootSystem::z2_product({k});
    const auto g = build_grid(rs, 10.0, 128);
    const double m = integrate(*g, gaussian(*g).real());
    CHECK(m == doctest::Approx(macdonald_constant(rs)).epsilon(1e-12));
  }
}

TEST_CASE("grid structure") {
  const auto g = build_grid(RootSystem::z2_product({0.5, 0.0}), 6.0, 16);
  CHECK(g->size() == 256);
  for (std::size_t i = 0; i < g->size(); ++i) {
    const int n = g->negation[i];
    CHECK((g->nodes[n] + g->nodes[i]).norm() < 1e-14);
    CHECK(g->flat(g->unflat(static_cast<int>(i))) == static_cast<int>(i));
  }
  CHECK_THROWS(build_grid(RootSystem::z2_product({0.5}), 6.0, 15));
}

TEST_CASE("self test on the default grid") {
  for (double k : {0.0, 0.5, 1.5}) {
    SpectralMatrix sm(build_grid(RootSystem::z2_product({k}), 10.0, 128));
    const auto st = self_test(sm);
    CHECK(st.gaussian_mass_error < 1e-10);
    CHECK(st.gaussian_transform_error < 1e-8);
    CHECK(st.roundtrip_error < 1e-6);
  }
}

TEST_CASE("Plancherel on random band-limited functions") {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double k : {0.0, 0.5, 1.5}) {
    SpectralMatrix sm(build_grid(RootSystem::z2_product({k}), 10.0, 128));
    const auto& g = sm.grid();
    for (int n = 0; n < 10; ++n) {
      CVec f = CVec::Zero(static_cast<Eigen::Index>(g.size()));
      for (int q = 0; q < 3; ++q) f += std::complex<double>(u(gen), u(gen)) * gaussian(g, 1.0 + 0.4 * u(gen), 3 * u(gen));
      const CVec F = dunkl_transform(sm, f);
      CHECK(std::abs(l2(g, F) - l2(g, f)) / l2(g, f) < 1e-6);
      CHECK(l2(g, inverse_transform(sm, F) - f) / l2(g, f) < 1e-6);
    }
  }
}

TEST_CASE("Gaussian is its own transform") {
  SpectralMatrix sm(build_grid(RootSystem::z2_product({0.5, 1.0}), 8.0, 64));
  const CVec f = gaussian(sm.grid());
  CHECK((dunkl_transform(sm, f) - f).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(parseval_defect(sm, f, gaussian(sm.grid(), 1.3)) < 1e-8);
}

TEST_CASE("translation multiplies the transform by the kernel") {
  const auto rs = RootSystem::z2_product({0.5});
  SpectralMatrix sm(build_grid(rs, 10.0, 128));
  const auto& g = sm.grid();
  Vec x(1);
  x << 0.8;
  const Vec tf = translate_radial(g, x, [](double r) { return std::exp(-r * r / 2); });
  const CVec lhs = dunkl_transform(sm, tf.cast<std::complex<double>>());
  const CVec F = dunkl_transform(sm, gaussian(g));
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto e = dunkl_kernel_imag(rs, x, g.nodes[i]);
    // F_k(tau_x f)(xi) = E_k(x, i xi) F_k f(xi)
    worst = std::max(worst, std::abs(lhs(static_cast<Eigen::Index>(i)) - e * F(static_cast<Eigen::Index>(i))));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("heat kernels convolve to heat kernels") {
  SpectralMatrix sm(build_grid(RootSystem::z2_product({0.5}), 10.0, 128));
  const CVec a = heat_kernel_function(sm, 0.3);
  const CVec b = heat_kernel_function(sm, 0.5);
  const CVec c = heat_kernel_function(sm, 0.8);
  CHECK((convolve(sm, a, b) - c).cwiseAbs().maxCoeff() / c.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("serial and parallel transform matrices are identical") {
  const auto g = build_grid(RootSystem::z2_product({1.5}), 8.0, 64);
  const auto s = axis_transform_matrix(1.5, g->axis_nodes[0], g->axis_mu[0], 11.3, Exec::Serial);
  const auto p = axis_transform_matrix(1.5, g->axis_nodes[0], g->axis_mu[0], 11.3, Exec::Parallel);
  CHECK((s - p).cwiseAbs().maxCoeff() == 0.0);
  const CVec v = gaussian(*g);
  CHECK((apply_dense(s, v, Exec::Serial) - apply_dense(s, v, Exec::Parallel)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kappa = 0 reduces to the Fourier transform") {
  SpectralMatrix sm(build_grid(RootSystem::z2_product({0.0}), 10.0, 128));
  const auto& g = sm.grid();
  // e^{-(x-a)^2/2} -> e^{-xi^2/2} e^{-i a xi}
  const double a = 1.5;
  const CVec F = dunkl_transform(sm, gaussian(g, 1.0, a));
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double xi = g.nodes[i](0);
    const auto want = std::exp(-xi * xi / 2) * std::exp(std::complex<double>(0, -a * xi));
    worst = std::max(worst, std::abs(F(static_cast<Eigen::Index>(i)) - want));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("csv round trip") {
  const auto g = build_grid(RootSystem::z2_product({0.5}), 4.0, 8);
  CVec f = gaussian(*g);
  f(3) = std::complex<double>(0.25, -1.0);
  std::stringstream ss;
  write_csv(ss, *g, f);
  const CVec h = read_csv(ss, *g);
  CHECK((h - f).cwiseAbs().maxCoeff() < 1e-15);
}
