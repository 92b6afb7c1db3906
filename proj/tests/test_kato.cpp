#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dunkl/kato.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

namespace {

const double pi = std::numbers::pi;

Potential pot(const std::string& name, std::map<std::string, double> p, int d) {
  return make_potential(name, p, d);
}

std::vector<Vec> origin(int d) { return {Vec::Zero(d)}; }

}  // namespace

TEST_CASE("Kato kernel") {
  CHECK(kato_kernel(1, 0.3) == 1.0);
  CHECK(kato_kernel(2, 0.5) == doctest::Approx(std::log(2.0)));
  CHECK(kato_kernel(3, 0.25) == doctest::Approx(4.0));
  CHECK(std::isfinite(kato_kernel(2, 0.0)));
}

TEST_CASE("definitional integrals against closed forms") {
  // d = 1, V = 1: the interval length
  CHECK(kato_integral(RootSystem::z2_product({0.0}), pot("constant", {}, 1), Vec::Zero(1), 1.0,
                      KatoForm::Classical) == doctest::Approx(2.0).epsilon(1e-12));
  // d = 1, |y|^{-1/2} on the unit ball: 4 sqrt t, less at most 4 sqrt(floor)
  // cut out around the singular point
  const double ip = kato_integral(RootSystem::z2_product({0.5}), pot("inverse_power", {{"beta", 0.5}}, 1),
                                  Vec::Zero(1), 0.3, KatoForm::Classical);
  CHECK(ip <= 2.1908902300206644);
  CHECK(ip >= 2.1908902300206644 - 4 * std::sqrt(IntegrationOptions{}.floor) - 1e-12);
  // d = 2, V = 1: 2 pi int_0^t r ln(1/r) dr
  CHECK(kato_integral(RootSystem::z2_product({0.0, 0.0}), pot("constant", {}, 2), Vec::Zero(2), 0.5,
                      KatoForm::Classical) == doctest::Approx(0.93709560427462469).epsilon(1e-9));
  // d = 3, |y|^{-1}: 4 pi t
  CHECK(kato_integral(RootSystem::z2_product({0.0, 0.0, 0.0}),
                      pot("inverse_power", {{"beta", 1.0}, {"cutoff", 10.0}}, 3), Vec::Zero(3), 0.5,
                      KatoForm::Classical) == doctest::Approx(2 * pi).epsilon(1e-8));
}

TEST_CASE("orbit form sits between the classical form and the orbit sum") {
  const auto rs = RootSystem::z2_product({0.5, 1.0});
  const auto v = pot("soft_coulomb", {}, 2);
  const auto probes = probe_points(v, 2, {4.0, 9});
  const auto rows = kato_equivalence_check(rs, v, {1.0, 0.3}, probes);
  for (const auto& r : rows) {
    CHECK(r.min_lower_slack >= -1e-10);
    CHECK(r.min_upper_slack >= -1e-10);
    CHECK(r.orbit >= r.classical - 1e-10);
  }
  // a ball away from every wall is counted once per group element
  Vec x(2);
  x << 2.0, 1.5;
  const double c = kato_integral(rs, v, x, 0.5, KatoForm::Classical);
  const double o = kato_integral(rs, v, x, 0.5, KatoForm::Orbit);
  CHECK(o == doctest::Approx(4 * c).epsilon(1e-8));
}

TEST_CASE("orbit form ignores inactive axes") {
  const auto v = pot("soft_coulomb", {}, 2);
  Vec x(2);
  x << 0.3, 0.2;
  const double a = kato_integral(RootSystem::z2_product({0.0, 0.0}), v, x, 0.5, KatoForm::Orbit);
  const double b = kato_integral(RootSystem::z2_product({0.0, 0.0}), v, x, 0.5, KatoForm::Classical);
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("modulus is monotone in t") {
  const auto rs = RootSystem::z2_product({0.5});
  const auto v = pot("inverse_power", {{"beta", 0.5}}, 1);
  const auto probes = probe_points(v, 1);
  double prev = 1e300;
  for (double t : {1.0, 0.3, 0.1, 0.03, 0.01}) {
    const auto m = kato_modulus(rs, v, t, KatoForm::Orbit, probes);
    CHECK(m.value <= prev);
    CHECK(m.value >= 0.0);
    CHECK(m.probes == static_cast<int>(probes.size()));
    prev = m.value;
  }
}

TEST_CASE("probe set carries the origin and the singular points") {
  auto v = pot("bump", {{"c0", 0.35}}, 1);
  v.singular_points.push_back(Vec::Constant(1, 0.123));
  const auto p = probe_points(v, 1);
  auto has = [&](double a) {
    for (const auto& q : p)
      if (std::abs(q(0) - a) < 1e-15) return true;
    return false;
  };
  CHECK(has(0.0));
  CHECK(has(0.123));
  CHECK(has(4.0));
}

TEST_CASE("heat modulus of V = 1 is t") {
  for (const auto& rs : {RootSystem::z2_product({0.5}), RootSystem::z2_product({0.0}),
                         RootSystem::z2_product({0.5, 1.5})}) {
    const int d = rs.dimension();
    const auto v = pot("constant", {}, d);
    Vec x = Vec::Constant(d, 1.3);
    for (double t : {1.0, 0.1, 0.01}) {
      CHECK(std::abs(heat_modulus(rs, v, t, {x}).value - t) <= 1e-8);
      CHECK(std::abs(heat_average(rs, v, x, t) - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("heat modulus reference values") {
  // mpmath double integral at x = 0 for 1 / (1 + y^2)
  const auto v = pot("soft_coulomb", {}, 1);
  CHECK(heat_modulus(RootSystem::z2_product({0.0}), v, 0.3, origin(1)).value ==
        doctest::Approx(0.25069471125137914).epsilon(1e-8));
  CHECK(heat_modulus(RootSystem::z2_product({0.5}), v, 0.3, origin(1)).value ==
        doctest::Approx(0.21520681587487377).epsilon(1e-8));
}

TEST_CASE("resolvent") {
  const auto one = resolvent_decay(RootSystem::z2_product({0.5}), pot("constant", {}, 1), {0.5, 2.0, 8.0},
                                   {Vec::Constant(1, 0.4)});
  for (const auto& r : one) CHECK(r.value == doctest::Approx(1.0 / r.a).epsilon(1e-8));
  const auto sc = resolvent_decay(RootSystem::z2_product({0.0}), pot("soft_coulomb", {}, 1), {2.0}, origin(1));
  CHECK(sc[0].value == doctest::Approx(0.35742934273771131).epsilon(1e-7));
  CHECK(sc[0].value <= sc[0].bound);
}

TEST_CASE("local integrability bound") {
  const auto v = pot("soft_coulomb", {}, 1);
  const auto g = growth_bound_check(RootSystem::z2_product({0.0}), v, {0.5, 1.0, 4.0, 16.0}, origin(1));
  // int_{-r}^{r} 1/(1+y^2) = 2 atan r <= 2 (r + 1)
  CHECK(g.rows[1].integral == doctest::Approx(2 * std::atan(1.0)).epsilon(1e-10));
  CHECK(g.C <= 2.0);
}

TEST_CASE("classifier verdicts in one dimension") {
  const auto rs = RootSystem::z2_product({0.5});
  CHECK(classify(rs, pot("zero", {}, 1)).verdict == Verdict::Kato);
  CHECK(classify(rs, pot("constant", {}, 1)).verdict == Verdict::Kato);
  CHECK(classify(rs, pot("inverse_power", {{"beta", 0.5}}, 1)).verdict == Verdict::Kato);
  CHECK(classify(rs, pot("inverse_power", {{"beta", 1.0}}, 1)).verdict == Verdict::NotKato);
  CHECK(classify(rs, pot("inverse_power", {{"beta", 1.5}}, 1)).verdict == Verdict::NotKato);
}

TEST_CASE("classifier in three dimensions") {
  const auto rs = RootSystem::z2_product({0.0, 0.0, 0.0});
  CHECK(classify(rs, pot("inverse_power", {{"beta", 1.0}}, 3)).verdict == Verdict::Kato);
  CHECK(classify(rs, pot("inverse_power", {{"beta", 2.0}}, 3)).verdict == Verdict::NotKato);
}

TEST_CASE("Riesz-Thorin corners") {
  auto g = build_grid(RootSystem::z2_product({0.5}), 6.0, 64);
  auto fr = std::make_shared<const BoxLaplacian>(g);
  const auto ed = eig(assemble_L(fr, sample_potential(pot("soft_coulomb", {}, 1), *g)));
  const double inf = std::numeric_limits<double>::infinity();
  const auto r = smoothing_norms(ed, 0.5, {{1, 1}, {2, 2}, {1, inf}, {2, inf}});
  CHECK(riesz_thorin(r, 1, 1) == doctest::Approx(r.norm_1_1));
  CHECK(riesz_thorin(r, inf, inf) == doctest::Approx(r.norm_inf_inf));
  CHECK(riesz_thorin(r, 1, inf) == doctest::Approx(r.norm_1_inf));
  CHECK(riesz_thorin(r, 2, 2) >= r.norm_2_2 * (1 - 1e-12));
  CHECK(r.norm_inf_inf <= 1 + 1e-6);
  CHECK(r.norm_1_1 == doctest::Approx(r.norm_inf_inf).epsilon(1e-8));
  REQUIRE(r.interpolated.size() == 4);
  CHECK(r.interpolated[3].value == doctest::Approx(riesz_thorin(r, 2, inf)));
}
