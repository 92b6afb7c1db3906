#include "dunkl/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

namespace {

void require_time(double t) {
  require(t > 0.0, ErrorKind::Input, "heat", "time must be positive");
}

}  // namespace

double paper_constant_factor(const RootSystem& rs) {
  return std::pow(2.0, gamma_k(rs) + 0.5 * rs.dimension());
}

HeatKernelEval heat_kernel(const RootSystem& rs, double t, const Vec& x, const Vec& y,
                           ConstantMode mode) {
  require_time(t);
  require(rs.kind() == GroupKind::Z2Product, ErrorKind::Capability, "heat",
          "closed-form kernel is available for Z2 products only");
  require(x.size() == rs.dimension() && y.size() == rs.dimension(), ErrorKind::Input, "heat",
          "dimension mismatch");
  const auto& k = rs.axis_multiplicities();
  double v = 1.0;
  for (int j = 0; j < rs.dimension(); ++j) v *= axis_heat(k[j], t, x(j), y(j));
  if (mode == ConstantMode::PaperEqKK) v *= paper_constant_factor(rs);
  return {t, v, mode};
}

Mat heat_kernel_matrix(const QuadratureGrid& g, double t, Exec exec) {
  require_time(t);
  const auto& k = g.rs.axis_multiplicities();
  std::vector<Mat> axes;
  for (int j = 0; j < g.dim; ++j)
    axes.push_back(axis_heat_table(k[j], t, g.axis_nodes[j], g.axis_nodes[j], exec));
  if (g.dim == 1) return axes[0];
  const auto n = static_cast<Eigen::Index>(g.size());
  Mat out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto ia = g.unflat(static_cast<int>(a));
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto ib = g.unflat(static_cast<int>(b));
      double v = 1.0;
      for (int j = 0; j < g.dim; ++j) v *= axes[j](ia[j], ib[j]);
      out(a, b) = v;
    }
  }
  return out;
}

double heat_kernel_mass(const RootSystem& rs, double t, const Vec& x) {
  require_time(t);
  const auto& k = rs.axis_multiplicities();
  double mass = 1.0;
  IntegrationOptions opts;
  opts.points = 24;
  opts.panels = 8;
  for (int j = 0; j < rs.dimension(); ++j) {
    const double xj = x(j);
    const double span = std::abs(xj) + 40.0 * std::sqrt(t);
    auto f = [&](double y) {
      return axis_heat(k[j], t, xj, y) * std::pow(2.0, k[j]) * std::pow(std::abs(y), 2.0 * k[j]);
    };
    const double w = std::sqrt(t);
    const double brk[] = {0.0,        xj,         -xj,        xj - 4 * w, xj + 4 * w,
                          -xj - 4 * w, -xj + 4 * w, xj - 10 * w, xj + 10 * w,
                          -xj - 10 * w, -xj + 10 * w};
    mass *= integrate(f, -span, span, brk, {}, opts);
  }
  return mass;
}

CVec heat_apply(const SpectralMatrix& sm, double t, const CVec& f) {
  require(t >= 0.0, ErrorKind::Input, "heat", "time must be nonnegative");
  if (t == 0.0) return f;
  const Vec s = sm.symbol();
  CVec h = sm.forward(f);
  for (Eigen::Index i = 0; i < h.size(); ++i) h(i) *= std::exp(-t * s(i));
  return sm.inverse(h);
}

Vec heat_apply_kernel(const QuadratureGrid& g, double t, const Vec& f) {
  const Mat k = heat_kernel_matrix(g, t);
  return apply_dense(k, Vec(f.cwiseProduct(g.mu)));
}

CVec heat_kernel_function(const SpectralMatrix& sm, double t) {
  require_time(t);
  const Vec s = sm.symbol();
  CVec h(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) h(i) = std::exp(-t * s(i));
  return sm.inverse(h);
}

namespace {

struct Sample {
  double u;       // |x+ - y+|^2 / t
  double log_k;
  double log_f[3];
};

GaussianFit fit_form(const std::vector<Sample>& s, int form, const char* name) {
  GaussianFit fit;
  fit.form = name;
  double su = 0, sl = 0, suu = 0, sul = 0;
  int n = 0;
  for (const auto& p : s) {
    if (p.u < 1.0) continue;
    const double l = p.log_k - p.log_f[form];
    su += p.u;
    sl += l;
    suu += p.u * p.u;
    sul += p.u * l;
    ++n;
  }
  fit.used = n;
  if (n < 3) return fit;
  const double slope = (n * sul - su * sl) / (n * suu - su * su);
  fit.c = -slope;
  double logC = -std::numeric_limits<double>::infinity();
  for (const auto& p : s) logC = std::max(logC, p.log_k - p.log_f[form] + fit.c * p.u);
  fit.C = std::exp(logC);
  fit.finite = std::isfinite(fit.C) && std::isfinite(fit.c) && fit.c > 0.0;
  return fit;
}

std::vector<Sample> draw(const RootSystem& rs, const ReflectionGroup& active,
                         const std::vector<double>& t_list, int pairs, std::uint64_t seed,
                         double box, double& min_k) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-box, box);
  const int d = rs.dimension();
  const double gam = gamma_k(rs);
  std::vector<Sample> out;
  for (double t : t_list) {
    for (int p = 0; p < pairs; ++p) {
      Vec x(d), y(d);
      for (int j = 0; j < d; ++j) x(j) = u(gen);
      for (int j = 0; j < d; ++j) y(j) = u(gen);
      const double k = heat_kernel(rs, t, x, y).value;
      min_k = std::min(min_k, k);
      if (!(k > 0.0)) continue;
      Sample s;
      const double dist = chamber_distance(active, x, y);
      s.u = dist * dist / t;
      s.log_k = std::log(k);
      const double r = std::sqrt(t);
      s.log_f[0] = -std::log(std::max(ball_measure(rs, x, r), ball_measure(rs, y, r)));
      s.log_f[1] = -0.5 * d * std::log(t) - std::log(std::max(weight(rs, x), weight(rs, y)));
      s.log_f[2] = -(0.5 * d + gam) * std::log(t);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

GaussianBoundReport gaussian_bound_report(const RootSystem& rs, const std::vector<double>& t_list,
                                          int sample_pairs, std::uint64_t seed, double box) {
  require(!t_list.empty() && sample_pairs > 0, ErrorKind::Input, "heat", "empty sample set");
  const auto active = generate_group(rs.active_part());
  GaussianBoundReport rep;
  rep.min_kernel = std::numeric_limits<double>::infinity();
  rep.samples = sample_pairs * static_cast<int>(t_list.size());
  static const char* names[] = {"ball", "weight", "homogeneous"};
  const auto s1 = draw(rs, active, t_list, sample_pairs, seed, box, rep.min_kernel);
  const auto s2 = draw(rs, active, t_list, 2 * sample_pairs, seed, box, rep.min_kernel);
  for (int f = 0; f < 3; ++f) {
    rep.fits.push_back(fit_form(s1, f, names[f]));
    rep.fits_doubled.push_back(fit_form(s2, f, names[f]));
  }
  return rep;
}

}  // namespace dunkl
