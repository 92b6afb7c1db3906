#include "doctest.h"

#include <cmath>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/reflection.hpp"

using namespace dunkl;

namespace {

Vec v2(double a, double b) {
  Vec x(2);
  x << a, b;
  return x;
}

Vec v1(double a) {
  Vec x(1);
  x << a;
  return x;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(generate_group(RootSystem::z2_product({0.5, 1.5, 0.0})).size() == 8);
  CHECK(generate_group(RootSystem::z2_product({0.5, 1.5, 0.0}).active_part()).size() == 4);
  CHECK(generate_group(RootSystem::dihedral(4, 0.5, 1.0)).size() == 8);
  CHECK(generate_group(RootSystem::dihedral(3, 1.0, 1.0)).size() == 6);
  CHECK(generate_group(RootSystem::dihedral(6, 0.5, 0.5)).size() == 12);
}

TEST_CASE("bad root systems are rejected") {
  CHECK_THROWS_AS(RootSystem::dihedral(3, 1.0, 2.0), Error);
  CHECK_THROWS_AS(RootSystem::z2_product({0.5, -0.1}), Error);
  CHECK_THROWS_AS(RootSystem::z2_product({}), Error);
}

TEST_CASE("every element is orthogonal and roots have length sqrt 2") {
  for (const auto& rs : {RootSystem::dihedral(5, 0.7, 0.7), RootSystem::z2_product({1.0, 0.5})}) {
    const auto g = generate_group(rs);
    for (const auto& m : g.elements())
      CHECK((m.transpose() * m - Mat::Identity(2, 2)).norm() < 1e-12);
    for (const auto& r : rs.positive_roots()) CHECK(r.vector.squaredNorm() == doctest::Approx(2.0));
  }
}

TEST_CASE("reflection is an involution fixing its hyperplane") {
  const auto rs = RootSystem::dihedral(3, 1.0, 1.0);
  for (const auto& a : rs.positive_roots()) {
    const Vec x = v2(0.3, -1.7);
    CHECK((reflect(a, reflect(a, x)) - x).norm() < 1e-14);
    CHECK((reflect(a, a.vector) + a.vector).norm() < 1e-14);
    const Vec p = v2(-a.vector(1), a.vector(0));
    CHECK((reflect(a, p) - p).norm() < 1e-14);
  }
}

TEST_CASE("weight and gamma") {
  const auto rs = RootSystem::z2_product({0.5});
  CHECK(weight(rs, v1(0.7)) == doctest::Approx(std::sqrt(2.0) * 0.7).epsilon(1e-14));
  CHECK(gamma_k(RootSystem::z2_product({0.5, 1.5})) == doctest::Approx(2.0));
  // two roots in each orbit of I_4
  CHECK(gamma_k(RootSystem::dihedral(4, 0.5, 1.0)) == doctest::Approx(3.0));
  CHECK(gamma_k(RootSystem::dihedral(3, 1.0, 1.0)) == doctest::Approx(3.0));
}

TEST_CASE("weight is invariant under the group") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const auto& rs : {RootSystem::dihedral(4, 0.5, 1.0), RootSystem::z2_product({0.5, 1.5})}) {
    const auto g = generate_group(rs);
    for (int n = 0; n < 50; ++n) {
      const Vec x = v2(u(gen), u(gen));
      for (const auto& m : g.elements())
        CHECK(weight(rs, m * x) == doctest::Approx(weight(rs, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("orbit distance equals chamber distance") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-4, 4);
  for (const auto& rs : {RootSystem::z2_product({0.5, 1.0}), RootSystem::dihedral(3, 1.0, 1.0),
                         RootSystem::dihedral(4, 0.5, 0.25)}) {
    const auto g = generate_group(rs);
    for (int n = 0; n < 200; ++n) {
      const Vec x = v2(u(gen), u(gen));
      const Vec y = v2(u(gen), u(gen));
      CHECK(orbit_distance(g, x, y) == doctest::Approx(chamber_distance(g, x, y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("canonical representative is constant on orbits") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-4, 4);
  const auto g = generate_group(RootSystem::dihedral(4, 1.0, 1.0));
  for (int n = 0; n < 50; ++n) {
    const Vec x = v2(u(gen), u(gen));
    const Vec c = canonical_rep(g, x);
    CHECK(std::abs(c.norm() - x.norm()) < 1e-12);
    for (const auto& m : g.elements()) CHECK((canonical_rep(g, m * x) - c).norm() < 1e-12);
  }
  const auto z = generate_group(RootSystem::z2_product({1.0, 1.0}));
  const Vec c = canonical_rep(z, v2(-1.0, 2.0));
  CHECK(c(0) >= 0.0);
  CHECK(c(1) >= 0.0);
}

TEST_CASE("rank-one ball measure") {
  // reference values from an independent mpmath quadrature
  CHECK(ball_measure(RootSystem::z2_product({0.5}), v1(0.3), 1.0) ==
        doctest::Approx(1.5414927829866737).epsilon(1e-12));
  CHECK(ball_measure(RootSystem::z2_product({1.5}), v1(-2.0), 0.5) ==
        doctest::Approx(24.041630560342617).epsilon(1e-12));
}

TEST_CASE("ball measure is doubling") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> ux(-3, 3), ur(0.05, 2.0);
  for (const auto& rs : {RootSystem::z2_product({0.5}), RootSystem::z2_product({1.5}),
                         RootSystem::z2_product({0.5, 1.0})}) {
    const int d = rs.dimension();
    const double bound = 2.0 * std::pow(2.0, d + 2 * gamma_k(rs));
    for (int n = 0; n < 30; ++n) {
      Vec x(d);
      for (int j = 0; j < d; ++j) x(j) = ux(gen);
      const double r = ur(gen);
      CHECK(ball_measure(rs, x, 2 * r) / ball_measure(rs, x, r) <= bound);
    }
  }
}

TEST_CASE("calibrated bracket holds on fresh balls") {
  const auto rs = RootSystem::z2_product({0.5, 1.0});
  const auto k = calibrate_ball_constants(rs, 200, 1);
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> ux(-3, 3), ur(0.05, 3.0);
  for (int n = 0; n < 50; ++n) {
    const Vec x = v2(ux(gen), ux(gen));
    const double r = ur(gen);
    const auto b = ball_volume(rs, x, r, k);
    const double m = ball_measure(rs, x, r);
    CHECK(m >= b.lower);
    CHECK(m <= b.upper);
  }
}

TEST_CASE("unit ball cover") {
  CHECK(unit_ball_cover_count(1, 3.0) == 4);
  CHECK(unit_ball_cover_count(2, 1.0) == 16);
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-1, 1);
  const Vec x = v2(0.4, -1.3);
  const double r = 2.5;
  const auto cover = unit_ball_cover(x, r);
  CHECK(cover.size() == unit_ball_cover_count(2, r));
  for (int n = 0; n < 500; ++n) {
    Vec y = v2(u(gen), u(gen));
    if (y.norm() > 1) continue;
    y = x + r * y;
    double best = 1e9;
    for (const auto& c : cover) best = std::min(best, (y - c).norm());
    CHECK(best <= 1.0 + 1e-12);
  }
}
