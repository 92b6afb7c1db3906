#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/schrodinger.hpp"

using namespace dunkl;

namespace {

struct Scene {
  std::shared_ptr<const QuadratureGrid> g;
  std::shared_ptr<const BoxLaplacian> free;
  DiscreteOperator op;
  EigenDecomp ed;
};

Scene scene(double k, const std::string& v, double R = 6.0, int N = 128) {
  auto g = build_grid(RootSystem::z2_product({k}), R, N);
  auto fr = std::make_shared<const BoxLaplacian>(g);
  auto op = assemble_L(fr, sample_potential(make_potential(v, {}, 1), *g));
  auto ed = eig(op);
  return {g, fr, std::move(op), std::move(ed)};
}

double l2(const QuadratureGrid& g, const Vec& f) { return std::sqrt(integrate(g, f.cwiseAbs2())); }

Vec bump(const QuadratureGrid& g) {
  return sample(g, [](const Vec& x) { return std::exp(-x.squaredNorm() / 2) * (1 + 0.3 * x(0)); });
}

bool contains(const Vec& v, double x, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i) - x) <= tol * x) return true;
  return false;
}

}  // namespace

TEST_CASE("box modes sit at Bessel zeros") {
  // first zeros of J_0, J_1, J_2 (mpmath)
  const double j0 = 2.4048255576957728, j1 = 3.8317059702075123, j2 = 5.1356223018406826;
  const double R = 10.0;
  auto g = build_grid(RootSystem::z2_product({0.5}), R, 128);
  const auto a = box_axis(0.5, g->axis_nodes[0], g->axis_mu[0], R);
  CHECK(contains(a.lambda2, j0 * j0 / (R * R), 1e-12));
  CHECK(contains(a.lambda2, j1 * j1 / (R * R), 1e-12));
  CHECK(a.lambda2.minCoeff() == doctest::Approx(j0 * j0 / (R * R)));
  g = build_grid(RootSystem::z2_product({1.5}), R, 128);
  const auto b = box_axis(1.5, g->axis_nodes[0], g->axis_mu[0], R);
  CHECK(contains(b.lambda2, j1 * j1 / (R * R), 1e-12));
  CHECK(contains(b.lambda2, j2 * j2 / (R * R), 1e-12));
}

TEST_CASE("operator is symmetric and nonnegative") {
  for (const char* v : {"zero", "soft_coulomb", "bump"}) {
    const auto s = scene(0.5, v);
    CHECK(s.op.symmetry_defect < 1e-10);
    CHECK(s.ed.values.minCoeff() >= -1e-8);
    CHECK(s.ed.reconstruction_defect < 1e-10);
    CHECK(s.ed.orthogonality_defect < 1e-10);
  }
}

TEST_CASE("quadratic form is the Dirichlet energy plus the potential") {
  const auto s = scene(0.5, "soft_coulomb", 10.0, 192);
  const auto& g = *s.g;
  const Vec f = bump(g);
  const Vec sq = g.mu.cwiseSqrt();
  const Vec h = sq.cwiseInverse().cwiseProduct(s.op.matrix * sq.cwiseProduct(f));
  const double lhs = integrate(g, h.cwiseProduct(f));
  const Vec tf = dunkl_derivative(g, 0, f.cast<std::complex<double>>()).real();
  const double rhs = integrate(g, tf.cwiseAbs2()) + integrate(g, s.op.potential.cwiseProduct(f.cwiseAbs2()));
  CHECK(std::abs(lhs - rhs) / rhs < 1e-4);
}

TEST_CASE("W_t is dominated by the free heat kernel") {
  // the bump needs N / R near 25 at t = 0.1
  for (const char* v : {"constant", "soft_coulomb", "bump"}) {
    const auto s = scene(0.5, v, 10.0, 256);
    for (double t : {0.1, 0.5, 1.0}) {
      const Mat w = schrodinger_kernel(s.ed, t);
      const Mat k = heat_kernel_matrix(*s.g, t);
      CHECK((w - k).maxCoeff() <= 1e-6);
      CHECK(w.minCoeff() >= -1e-6);
    }
  }
}

TEST_CASE("constant potential shifts the semigroup") {
  const auto z = scene(1.5, "zero");
  const auto c = scene(1.5, "constant");
  const Vec f = bump(*z.g);
  const Vec a = semigroup_apply(c.ed, 0.7, f);
  const Vec b = std::exp(-0.7) * semigroup_apply(z.ed, 0.7, f);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Trotter splitting is first order") {
  const auto s = scene(0.5, "soft_coulomb");
  const Vec f = bump(*s.g);
  const Vec ref = semigroup_apply(s.ed, 1.0, f);
  double prev = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const double gap = l2(*s.g, semigroup_trotter(s.op, 1.0, n, f) - ref);
    if (prev > 0) {
      CHECK(prev / gap >= 1.6);
      CHECK(prev / gap <= 2.4);
    }
    prev = gap;
  }
}

TEST_CASE("subordination matches the spectral inverse square root") {
  const auto s = scene(0.5, "soft_coulomb");
  const Vec f = bump(*s.g);
  const auto sub = inv_sqrt_subordination(s.op, f);
  const Vec ex = inv_sqrt_apply(s.ed, f);
  CHECK((sub.value - ex).cwiseAbs().maxCoeff() / ex.cwiseAbs().maxCoeff() < 1e-4);
  CHECK(sub.error_estimate < 1e-4);
  // L^{-1/2} L^{-1/2} = L^{-1}
  const Vec twice = inv_sqrt_apply(s.ed, ex);
  const Vec inv = spectral_apply(s.ed, [](double l) { return 1.0 / l; }, f);
  CHECK((twice - inv).cwiseAbs().maxCoeff() / inv.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral floor raises a numerical error") {
  const auto s = scene(0.5, "zero");
  const Vec f = bump(*s.g);
  try {
    inv_sqrt_apply(s.ed, f, 1.0);
    FAIL("expected a floor violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Numerical);
  }
}

TEST_CASE("Riesz transform is an L2 contraction") {
  for (const char* v : {"zero", "soft_coulomb"}) {
    const auto s = scene(0.5, v, 10.0, 192);
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int n = 0; n < 20; ++n) {
      const double c = 4 * u(gen), w = 1 + 0.5 * u(gen);
      const Vec f = sample(*s.g, [&](const Vec& x) { return std::exp(-(x(0) - c) * (x(0) - c) / (2 * w * w)); });
      CHECK(l2(*s.g, riesz_apply(s.ed, 0, f)) <= (1 + 1e-3) * l2(*s.g, f));
    }
  }
}

TEST_CASE("weak-type ratio of an indicator") {
  const auto g = build_grid(RootSystem::z2_product({0.0}), 4.0, 64);
  Vec v = Vec::Zero(static_cast<Eigen::Index>(g->size()));
  for (std::size_t i = 0; i < g->size(); ++i)
    if (std::abs(g->nodes[i](0)) < 1.0) v(static_cast<Eigen::Index>(i)) = 3.0;
  // sup_lambda lambda mu{|v| > lambda} = 3 * mu(set)
  double m = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i)
    if (std::abs(g->nodes[i](0)) < 1.0) m += g->mu(static_cast<Eigen::Index>(i));
  CHECK(weak_type_sup(*g, v) == doctest::Approx(3 * m).epsilon(1e-12));
}

TEST_CASE("scaling identity") {
  const auto g = build_grid(RootSystem::z2_product({0.5}), 8.0, 128);
  const auto v = make_potential("soft_coulomb", {}, 1);
  CHECK(scaling_identity_gap(*g, v, 0.5) < 1e-4);
}

TEST_CASE("potential presets") {
  Vec x(2);
  x << 0.6, -0.8;
  CHECK(make_potential("soft_coulomb", {{"a", 2.0}}, 2)(x) == doctest::Approx(1.0 / 3.0));
  CHECK(make_potential("constant", {{"c", 2.5}}, 2)(x) == 2.5);
  CHECK(make_potential("inverse_power", {{"beta", 1.0}, {"cutoff", 2.0}}, 2)(x) == doctest::Approx(1.0));
  CHECK(make_potential("inverse_power", {{"beta", 1.0}, {"cutoff", 0.5}}, 2)(x) == 0.0);
  CHECK(make_potential("bump", {}, 2)(Vec::Zero(2)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_potential("no_such", {}, 1), Error);
  CHECK_THROWS_AS(make_potential("constant", {{"c", -1.0}}, 1), Error);
}
