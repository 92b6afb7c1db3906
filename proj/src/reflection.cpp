#include "dunkl/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

namespace {

constexpr double kNormTol = 1e-12;

bool same_vector(const Vec& a, const Vec& b, double tol) {
  return (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

}  // namespace

RootSystem RootSystem::z2_product(std::vector<double> axis_multiplicities) {
  require(!axis_multiplicities.empty(), ErrorKind::Input, "reflection",
          "Z2 product needs at least one axis");
  RootSystem rs;
  rs.dim_ = static_cast<int>(axis_multiplicities.size());
  rs.kind_ = GroupKind::Z2Product;
  rs.axis_k_ = std::move(axis_multiplicities);
  for (int j = 0; j < rs.dim_; ++j) {
    Vec v = Vec::Zero(rs.dim_);
    v(j) = std::sqrt(2.0);
    rs.roots_.push_back({v, rs.axis_k_[j]});
  }
  rs.validate();
  return rs;
}

RootSystem RootSystem::dihedral(int m, double k_even, double k_odd) {
  require(m >= 2, ErrorKind::Input, "reflection", "dihedral order must be at least 2");
  require(m % 2 == 0 || k_even == k_odd, ErrorKind::Input, "reflection",
          "odd dihedral groups have a single root orbit; multiplicities must agree");
  RootSystem rs;
  rs.dim_ = 2;
  rs.kind_ = GroupKind::Dihedral;
  rs.m_ = m;
  for (int j = 0; j < m; ++j) {
    const double th = j * std::numbers::pi / m;
    Vec v(2);
    v << std::sqrt(2.0) * std::cos(th), std::sqrt(2.0) * std::sin(th);
    rs.roots_.push_back({v, j % 2 == 0 ? k_even : k_odd});
  }
  rs.validate();
  return rs;
}

const std::vector<double>& RootSystem::axis_multiplicities() const {
  require(kind_ == GroupKind::Z2Product, ErrorKind::Capability, "reflection",
          "axis multiplicities exist only for Z2 products");
  return axis_k_;
}

RootSystem RootSystem::active_part() const {
  RootSystem rs = *this;
  rs.roots_.clear();
  for (const auto& r : roots_)
    if (r.multiplicity > 0.0) rs.roots_.push_back(r);
  return rs;
}

void RootSystem::validate() const {
  for (const auto& r : roots_) {
    require(r.vector.size() == dim_, ErrorKind::Input, "reflection", "root dimension mismatch");
    require(std::abs(r.vector.squaredNorm() - 2.0) <= kNormTol, ErrorKind::Input, "reflection",
            "roots must satisfy |alpha|^2 = 2");
    require(r.multiplicity >= 0.0 && std::isfinite(r.multiplicity), ErrorKind::Input,
            "reflection", "multiplicities must be nonnegative");
  }
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      require(!same_vector(roots_[i].vector, roots_[j].vector, 1e-10) &&
                  !same_vector(roots_[i].vector, -roots_[j].vector, 1e-10),
              ErrorKind::Input, "reflection", "root system is not reduced");
  // G-invariance: sigma_beta maps each root to +-(some root) with equal multiplicity
  for (const auto& b : roots_) {
    for (const auto& a : roots_) {
      const Vec img = reflect(b, a.vector);
      bool found = false;
      for (const auto& c : roots_) {
        if (same_vector(img, c.vector, 1e-9) || same_vector(img, -c.vector, 1e-9)) {
          require(std::abs(c.multiplicity - a.multiplicity) <= 1e-12, ErrorKind::Input,
                  "reflection", "multiplicity is not constant on root orbits");
          found = true;
          break;
        }
      }
      require(found, ErrorKind::Input, "reflection", "roots are not closed under reflection");
    }
  }
}

int ReflectionGroup::find(const Mat& g) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if ((elements_[i] - g).lpNorm<Eigen::Infinity>() <= kDedupTolerance)
      return static_cast<int>(i);
  return -1;
}

Vec reflect(const Root& alpha, const Vec& x) {
  require(alpha.vector.size() == x.size(), ErrorKind::Input, "reflection",
          "dimension mismatch in reflect");
  return x - x.dot(alpha.vector) * alpha.vector;
}

Mat reflection_matrix(const Root& alpha) {
  const auto d = alpha.vector.size();
  return Mat::Identity(d, d) - alpha.vector * alpha.vector.transpose();
}

ReflectionGroup generate_group(const RootSystem& rs, std::size_t size_cap) {
  ReflectionGroup g;
  g.dim_ = rs.dimension();
  g.z2_ = rs.kind() == GroupKind::Z2Product;
  g.roots_ = rs.positive_roots();
  const int d = rs.dimension();

  std::vector<Mat> gens;
  for (const auto& r : rs.positive_roots()) gens.push_back(reflection_matrix(r));

  g.elements_.push_back(Mat::Identity(d, d));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Mat cur = g.elements_[queue.front()];
    queue.pop_front();
    for (const auto& s : gens) {
      Mat next = s * cur;
      if (g.find(next) >= 0) continue;
      require(g.elements_.size() < size_cap, ErrorKind::Structural, "reflection",
              "group closure exceeded the size cap; root system is not finite");
      g.elements_.push_back(std::move(next));
      queue.push_back(g.elements_.size() - 1);
    }
  }
  return g;
}

double weight(const RootSystem& rs, const Vec& x) {
  double w = 1.0;
  for (const auto& r : rs.positive_roots()) {
    if (r.multiplicity == 0.0) continue;
    w *= std::pow(std::abs(r.vector.dot(x)), 2.0 * r.multiplicity);
  }
  return w;
}

double gamma_k(const RootSystem& rs) {
  double s = 0.0;
  for (const auto& r : rs.positive_roots()) s += r.multiplicity;
  return s;
}

Vec canonical_rep(const ReflectionGroup& g, const Vec& x) {
  if (g.is_z2_product()) return x.cwiseAbs();
  auto margin = [&](const Vec& v) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : g.roots()) m = std::min(m, r.vector.dot(v));
    return m;
  };
  if (margin(x) >= -1e-14) return x;
  Vec best = x;
  double best_m = -std::numeric_limits<double>::infinity();
  for (const auto& e : g.elements()) {
    Vec v = e * x;
    const double m = margin(v);
    if (m > best_m) {
      best_m = m;
      best = std::move(v);
    }
  }
  return best;
}

double orbit_distance(const ReflectionGroup& g, const Vec& x, const Vec& y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : g.elements()) best = std::min(best, (e * x - y).norm());
  return best;
}

double chamber_distance(const ReflectionGroup& g, const Vec& x, const Vec& y) {
  return (canonical_rep(g, x) - canonical_rep(g, y)).norm();
}

double ball_comparison(const RootSystem& rs, const Vec& x, double r) {
  require(r > 0.0, ErrorKind::Input, "reflection", "ball radius must be positive");
  double q = std::pow(r, rs.dimension());
  for (const auto& a : rs.positive_roots())
    q *= std::pow(std::abs(a.vector.dot(x)) + r, 2.0 * a.multiplicity);
  return q;
}

BallEstimate ball_volume(const RootSystem& rs, const Vec& x, double r, BallConstants k) {
  const double q = ball_comparison(rs, x, r);
  return {k.c * q, k.C * q};
}

namespace {

// integral of 2^k |y|^{2k} over [a, b]
double axis_mass(double k, double a, double b) {
  auto prim = [k](double y) {
    return std::pow(2.0, k) * std::copysign(std::pow(std::abs(y), 2.0 * k + 1.0), y) /
           (2.0 * k + 1.0);
  };
  return prim(b) - prim(a);
}

}  // namespace

double ball_measure(const RootSystem& rs, const Vec& x, double r, std::uint64_t seed,
                    int mc_samples) {
  require(r > 0.0, ErrorKind::Input, "reflection", "ball radius must be positive");
  require(x.size() == rs.dimension(), ErrorKind::Input, "reflection", "dimension mismatch");
  if (rs.kind() == GroupKind::Z2Product && rs.dimension() == 1) {
    return axis_mass(rs.axis_multiplicities()[0], x(0) - r, x(0) + r);
  }
  if (rs.kind() == GroupKind::Z2Product && rs.dimension() == 2) {
    const double k1 = rs.axis_multiplicities()[0];
    const double k2 = rs.axis_multiplicities()[1];
    auto inner = [&](double y1) {
      const double h = std::sqrt(std::max(0.0, r * r - (y1 - x(0)) * (y1 - x(0))));
      return std::pow(2.0, k1) * std::pow(std::abs(y1), 2.0 * k1) *
             axis_mass(k2, x(1) - h, x(1) + h);
    };
    const double brk[] = {0.0};
    const double sing[] = {x(0) - r, x(0) + r};
    IntegrationOptions opts;
    opts.points = 24;
    opts.floor = 1e-14;
    return integrate(inner, x(0) - r, x(0) + r, brk, sing, opts);
  }
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = rs.dimension();
  double acc = 0.0;
  Vec y(d);
  for (int s = 0; s < mc_samples; ++s) {
    Vec p(d);
    for (int i = 0; i < d; ++i) p(i) = u(gen);
    if (p.squaredNorm() > 1.0) continue;
    y = x + r * p;
    acc += weight(rs, y);
  }
  return acc / mc_samples * std::pow(2.0 * r, d);
}

BallConstants calibrate_ball_constants(const RootSystem& rs, int samples, std::uint64_t seed,
                                       double margin) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> ux(-5.0, 5.0);
  std::uniform_real_distribution<double> ur(std::log(0.05), std::log(5.0));
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec x(rs.dimension());
    for (int i = 0; i < x.size(); ++i) x(i) = ux(gen);
    const double r = std::exp(ur(gen));
    const double ratio = ball_measure(rs, x, r, gen(), 20000) / ball_comparison(rs, x, r);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo / margin, hi * margin};
}

std::vector<Vec> unit_ball_cover(const Vec& x, double r) {
  require(r > 0.0, ErrorKind::Input, "reflection", "ball radius must be positive");
  const int d = static_cast<int>(x.size());
  const int half = static_cast<int>(std::floor(r * d / 2.0)) + 1;
  const int per_axis = 2 * half;
  std::vector<Vec> centers;
  std::vector<int> idx(d, 1);
  while (true) {
    Vec c(d);
    for (int i = 0; i < d; ++i)
      c(i) = x(i) - 2.0 * half / d + (2.0 * idx[i] - 1.0) / d;
    centers.push_back(std::move(c));
    int i = 0;
    while (i < d && ++idx[i] > per_axis) idx[i++] = 1;
    if (i == d) break;
  }
  return centers;
}

std::size_t unit_ball_cover_count(int d, double r) {
  const auto half = static_cast<std::size_t>(std::floor(r * d / 2.0)) + 1;
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) n *= 2 * half;
  return n;
}

}  // namespace dunkl
