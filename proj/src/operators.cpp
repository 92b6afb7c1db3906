#include "dunkl/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dunkl/error.hpp"
#include "dunkl/intertwine.hpp"

namespace dunkl {

std::vector<double> fd_weights(double x0, const std::vector<double>& xs) {
  // Fornberg, derivative orders 0 and 1
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(2, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][1];
  return w;
}

namespace {

struct AxisStencil {
  std::vector<int> start;
  std::vector<std::vector<double>> w;
};

AxisStencil make_stencil(const std::vector<double>& x, int order) {
  require(order == 2 || order == 4 || order == 6, ErrorKind::Input, "operators",
          "finite-difference order must be 2, 4 or 6");
  const int n = static_cast<int>(x.size());
  const int width = order + 1;
  require(n >= width, ErrorKind::Input, "operators", "grid too small for the stencil");
  AxisStencil s;
  s.start.resize(n);
  s.w.resize(n);
  for (int i = 0; i < n; ++i) {
    const int st = std::clamp(i - order / 2, 0, n - width);
    s.start[i] = st;
    s.w[i] = fd_weights(x[i], std::vector<double>(x.begin() + st, x.begin() + st + width));
  }
  return s;
}

void require_size(const QuadratureGrid& g, const CVec& f) {
  require(static_cast<std::size_t>(f.size()) == g.size(), ErrorKind::Input, "operators",
          "sample length does not match the grid");
}

}  // namespace

CVec partial_derivative(const QuadratureGrid& g, int axis, const CVec& f, int order) {
  require_size(g, f);
  require(axis >= 0 && axis < g.dim, ErrorKind::Input, "operators", "axis out of range");
  const auto st = make_stencil(g.axis_nodes[axis], order);
  int stride = 1;
  for (int j = g.dim - 1; j > axis; --j) stride *= g.n_axis;
  const auto n = static_cast<Eigen::Index>(g.size());
  CVec out(n);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    const int ia = static_cast<int>(i / stride) % g.n_axis;
    const Eigen::Index base = i - static_cast<Eigen::Index>(ia) * stride;
    std::complex<double> s = 0.0;
    const auto& w = st.w[ia];
    for (std::size_t q = 0; q < w.size(); ++q)
      s += w[q] * f(base + static_cast<Eigen::Index>(st.start[ia] + q) * stride);
    out(i) = s;
  }
  return out;
}

CVec dunkl_derivative(const QuadratureGrid& g, const DunklDerivativeStencil& s, const CVec& f) {
  require_size(g, f);
  require(s.direction.size() == g.dim, ErrorKind::Input, "operators", "direction dimension");
  require(static_cast<int>(g.axis_flip.size()) == g.dim, ErrorKind::Structural, "operators",
          "grid carries no reflection map");
  const auto& k = g.rs.axis_multiplicities();
  CVec out = CVec::Zero(f.size());
  for (int j = 0; j < g.dim; ++j) {
    const double xi = s.direction(j);
    if (xi == 0.0) continue;
    const CVec dj = partial_derivative(g, j, f, s.fd_order);
    double guard = s.guard;
    if (guard < 0.0) {
      double m = std::numeric_limits<double>::infinity();
      for (double x : g.axis_nodes[j]) m = std::min(m, std::abs(x));
      guard = 0.5 * m;
    }
    const auto& flip = g.axis_flip[j];
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      std::complex<double> v = dj(i);
      if (k[j] != 0.0) {
        const double xj = g.nodes[i](j);
        // root sqrt(2) e_j: k <alpha, xi> / <alpha, x> = k xi_j / x_j
        if (std::abs(xj) * std::sqrt(2.0) < guard)
          v += 2.0 * k[j] * dj(i);
        else
          v += k[j] * (f(i) - f(flip[i])) / xj;
      }
      out(i) += xi * v;
    }
  }
  return out;
}

CVec dunkl_derivative(const QuadratureGrid& g, int axis, const CVec& f, int order) {
  DunklDerivativeStencil s;
  s.direction = Vec::Zero(g.dim);
  s.direction(axis) = 1.0;
  s.fd_order = order;
  return dunkl_derivative(g, s, f);
}

CVec dunkl_laplacian(const QuadratureGrid& g, const CVec& f, int order) {
  CVec out = CVec::Zero(f.size());
  for (int j = 0; j < g.dim; ++j)
    out += dunkl_derivative(g, j, dunkl_derivative(g, j, f, order), order);
  return out;
}

CVec spectral_laplacian(const SpectralMatrix& sm, const CVec& f) {
  const Vec s = sm.symbol();
  return -sm.inverse(sm.forward(f).cwiseProduct(s.cast<std::complex<double>>()));
}

double antisymmetry_defect(const QuadratureGrid& g, int axis, const CVec& f, const CVec& h,
                           int order) {
  return std::abs(inner(g, dunkl_derivative(g, axis, f, order), h) +
                  inner(g, f, dunkl_derivative(g, axis, h, order)));
}

double multiplier_defect(const SpectralMatrix& sm, int axis, const CVec& f, int order) {
  const auto& g = sm.grid();
  const CVec lhs = sm.forward(dunkl_derivative(g, axis, f, order));
  CVec rhs = sm.forward(f);
  for (Eigen::Index i = 0; i < rhs.size(); ++i)
    rhs(i) *= std::complex<double>(0.0, g.nodes[i](axis));
  return norm(g, lhs - rhs);
}

std::vector<bool> interior_mask(const QuadratureGrid& g, double fraction) {
  std::vector<bool> m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    m[i] = g.nodes[i].lpNorm<Eigen::Infinity>() <= fraction * g.R;
  return m;
}

}  // namespace dunkl

namespace dunkl {

namespace {

Vec phi_samples(const QuadratureGrid& g, const Vec& y, int nu_nodes) {
  Vec p(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    p(static_cast<Eigen::Index>(i)) = phi(g.rs, g.nodes[i], y, 1.0, nu_nodes).value;
  return p;
}

CVec as_complex(const Vec& v) { return v.cast<std::complex<double>>(); }

}  // namespace

PhiBoundReport phi_bound_report(const QuadratureGrid& g, const Vec& y, int axis, int nu_nodes,
                                double interior) {
  require(axis >= 0 && axis < g.dim, ErrorKind::Input, "operators", "axis out of range");
  const Vec p = phi_samples(g, y, nu_nodes);
  const Vec tp = dunkl_derivative(g, axis, as_complex(p)).real();
  const Vec ttp = dunkl_derivative(g, axis, as_complex(tp)).real();
  const auto mask = interior_mask(g, interior);
  const auto& k = g.rs.axis_multiplicities();
  PhiBoundReport r;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!mask[i]) continue;
    const auto ii = static_cast<Eigen::Index>(i);
    ++r.nodes;
    r.C_square = std::max(r.C_square, std::abs(ttp(ii)) / p(ii));
    for (int a = 0; a < g.dim; ++a) {
      if (k[a] == 0.0) continue;
      const double xa = std::sqrt(2.0) * g.nodes[i](a);
      const double dd = (tp(ii) - tp(g.axis_flip[a][i])) / xa;
      r.C_divided = std::max(r.C_divided, std::abs(dd) / p(ii));
    }
  }
  return r;
}

double phi_energy_ratio(const QuadratureGrid& g, const Vec& y, int axis, const Vec& f,
                        int nu_nodes) {
  const Vec p = phi_samples(g, y, nu_nodes);
  const Vec tp = dunkl_derivative(g, axis, as_complex(p)).real();
  const Vec tf = dunkl_derivative(g, axis, as_complex(f)).real();
  const double num = (tf.cwiseProduct(f).cwiseProduct(tp).cwiseProduct(g.mu)).sum();
  const double den = (f.cwiseAbs2().cwiseProduct(p).cwiseProduct(g.mu)).sum();
  return std::abs(num) / den;
}

double phi_energy_bound(const RootSystem& rs, int axis, const PhiBoundReport& r) {
  double s = 0.0;
  for (const auto& a : rs.positive_roots()) s += a.multiplicity * std::abs(a.vector(axis));
  return 0.5 * (r.C_square + 2.0 * s * r.C_divided);
}

}  // namespace dunkl
