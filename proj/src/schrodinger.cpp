#include "dunkl/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "dunkl/error.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/operators.hpp"

namespace dunkl {

namespace {

Vec sqrt_mu(const QuadratureGrid& g) { return g.mu.array().sqrt().matrix(); }

Vec real_part(const CVec& v) { return v.real(); }

int nearest_node(const QuadratureGrid& g, const Vec& y) {
  int best = 0;
  double bd = (g.nodes[0] - y).squaredNorm();
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double d = (g.nodes[i] - y).squaredNorm();
    if (d < bd) {
      bd = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

DiscreteOperator assemble_L(std::shared_ptr<const BoxLaplacian> free, const Vec& v) {
  require(free != nullptr, ErrorKind::Input, "schrodinger", "missing free operator");
  require(v.size() == static_cast<Eigen::Index>(free->grid().size()), ErrorKind::Input,
          "schrodinger", "potential is not sampled on this grid");
  require(v.allFinite() && v.minCoeff() >= 0.0, ErrorKind::Input, "schrodinger",
          "potential must be finite and nonnegative");
  DiscreteOperator op;
  op.free = std::move(free);
  op.potential = v;
  Mat h = op.free->similarity();
  h.diagonal() += v;
  op.symmetry_defect = (h - h.transpose()).cwiseAbs().maxCoeff();
  require(op.symmetry_defect <= 1e-6 * std::max(1.0, h.cwiseAbs().maxCoeff()),
          ErrorKind::Numerical, "schrodinger", "operator is far from symmetric");
  op.matrix = 0.5 * (h + h.transpose());
  return op;
}

EigenDecomp eig(const DiscreteOperator& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.matrix);
  require(es.info() == Eigen::Success, ErrorKind::Numerical, "schrodinger",
          "eigensolver did not converge");
  EigenDecomp ed;
  ed.values = es.eigenvalues();
  ed.vectors = es.eigenvectors();
  ed.grid = h.free->grid_ptr();
  ed.free = h.free;
  const Mat rec = ed.vectors * ed.values.asDiagonal() * ed.vectors.transpose();
  ed.reconstruction_defect = (rec - h.matrix).norm() / h.matrix.norm();
  const auto n = ed.vectors.cols();
  ed.orthogonality_defect =
      (ed.vectors.transpose() * ed.vectors - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  return ed;
}

Vec spectral_apply(const EigenDecomp& ed, const std::function<double(double)>& f, const Vec& u) {
  const Vec s = sqrt_mu(*ed.grid);
  Vec c = ed.vectors.transpose() * u.cwiseProduct(s);
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= f(ed.values(i));
  return (ed.vectors * c).cwiseQuotient(s);
}

Vec semigroup_apply(const EigenDecomp& ed, double t, const Vec& f) {
  require(t >= 0.0, ErrorKind::Input, "schrodinger", "time must be nonnegative");
  if (t == 0.0) return f;
  return spectral_apply(ed, [t](double l) { return std::exp(-t * l); }, f);
}

Vec semigroup_trotter(const DiscreteOperator& h, double t, int n_steps, const Vec& f) {
  require(t >= 0.0 && n_steps >= 1, ErrorKind::Input, "schrodinger",
          "need t >= 0 and at least one step");
  if (t == 0.0) return f;
  const double tau = t / n_steps;
  const Vec damp = (-tau * h.potential.array()).exp().matrix();
  const Vec s = sqrt_mu(h.grid());
  const Mat step = h.free->heat_similarity(tau);
  Vec u = f.cwiseProduct(s);
  for (int i = 0; i < n_steps; ++i) u = step * u.cwiseProduct(damp);
  return u.cwiseQuotient(s);
}

Mat schrodinger_kernel(const EigenDecomp& ed, double t) {
  require(t > 0.0, ErrorKind::Input, "schrodinger", "time must be positive");
  const Vec e = (-t * ed.values.array()).exp().matrix();
  const Mat m = ed.vectors * e.asDiagonal() * ed.vectors.transpose();
  const Vec inv = sqrt_mu(*ed.grid).cwiseInverse();
  return inv.asDiagonal() * m * inv.asDiagonal();
}

Vec inv_sqrt_apply(const EigenDecomp& ed, const Vec& f, double floor) {
  if (ed.lambda_min() < floor)
    throw Error(ErrorKind::Numerical, "schrodinger",
                "discrete operator has a zero mode (lambda_min = " +
                    std::to_string(ed.lambda_min()) + " below floor); L^{-1/2} is ill-posed");
  return spectral_apply(ed, [](double l) { return 1.0 / std::sqrt(l); }, f);
}

SubordinationResult inv_sqrt_subordination(const DiscreteOperator& h, const Vec& f,
                                           const SubordinationSpec& spec) {
  require(spec.nodes >= 3 && spec.u_max > spec.u_min, ErrorKind::Input, "schrodinger",
          "bad subordination rule");
  const double span = spec.u_max - spec.u_min;
  const int k = std::max(1, static_cast<int>(std::ceil(std::log(2.0) * (spec.nodes - 1) / span)));
  const double hstep = std::log(2.0) / k;
  const int n = static_cast<int>(std::floor(span / hstep + 1e-9)) + 1;
  const Vec s = sqrt_mu(h.grid());
  const Vec g = f.cwiseProduct(s);

  // Below s |H| = 1 a Taylor series on the vector is accurate. Above it,
  // node i + k is the square of node i; each chain starts from a direct
  // exponential with s |H| >= 1, where repeated squaring stays well
  // conditioned (starting at tiny s would amplify the rounding of e^{-sH}
  // by 2 per squaring).
  const double hnorm = std::max(h.matrix.lpNorm<1>(), 1e-300);
  std::vector<Vec> terms(n);
  int first = n;
  for (int i = 0; i < n; ++i) {
    const double si = std::exp(spec.u_min + i * hstep);
    if (si * hnorm > 1.0) {
      first = i;
      break;
    }
    Vec acc = g, term = g;
    for (int p = 1; p < 60 && term.lpNorm<Eigen::Infinity>() > 1e-18 * acc.lpNorm<Eigen::Infinity>();
         ++p) {
      term = (-si / p) * (h.matrix * term);
      acc += term;
    }
    terms[i] = acc;
  }
  for (int c = first; c < first + k && c < n; ++c) {
    const double s0 = std::exp(spec.u_min + c * hstep);
    Mat e = (-s0 * h.matrix).exp();
    for (int i = c; i < n; i += k) {
      if (i != c) e = (e * e).eval();
      terms[i] = e * g;
    }
  }
  auto rule = [&](int stride) {
    Vec acc = Vec::Zero(g.size());
    for (int i = 0; i < n; i += stride) {
      const double u = spec.u_min + i * hstep;
      const double w = (i == 0 || i + stride >= n) ? 0.5 : 1.0;
      acc += w * std::exp(0.5 * u) * terms[i];
    }
    return Vec(acc * stride * hstep / std::sqrt(M_PI));
  };
  // tail below u_min: int e^{u/2} (g - e^u H g) du = 2 e^{a/2} g - (2/3) e^{3a/2} H g
  const Vec hg = h.matrix * g;
  const Vec tail = (2.0 * std::exp(0.5 * spec.u_min) * g -
                    (2.0 / 3.0) * std::exp(1.5 * spec.u_min) * hg) / std::sqrt(M_PI);
  SubordinationResult r;
  const Vec fine = rule(1) + tail;
  const Vec coarse = rule(2) + tail;
  r.value = fine.cwiseQuotient(s);
  r.nodes = n;
  r.spacing = hstep;
  const double upper = std::exp(0.5 * spec.u_max) * terms[n - 1].lpNorm<Eigen::Infinity>();
  r.error_estimate = (fine - coarse).cwiseQuotient(s).cwiseAbs().maxCoeff() +
                     (0.4 * std::exp(2.5 * spec.u_min) * (h.matrix * hg)).cwiseQuotient(s).lpNorm<Eigen::Infinity>() +
                     upper / s.minCoeff();
  return r;
}

Vec riesz_apply(const EigenDecomp& ed, int axis, const Vec& f, int fd_order) {
  const Vec g = ed.free->project(inv_sqrt_apply(ed, f));
  return real_part(dunkl_derivative(*ed.grid, axis, CVec(g.cast<std::complex<double>>()), fd_order));
}

double weak_type_sup(const QuadratureGrid& g, const Vec& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(values(a)) > std::abs(values(b));
  });
  double mass = 0.0, best = 0.0;
  for (auto i : order) {
    mass += g.mu(i);
    best = std::max(best, std::abs(values(i)) * mass);
  }
  return best;
}

WeakTypeReport weak_type_report(const EigenDecomp& ed, int axis, const std::vector<Vec>& centers,
                                const std::vector<double>& radii, const WeakTypeOptions& opts) {
  const auto& g = *ed.grid;
  double cut2 = 0.0;
  for (int j = 0; j < g.dim; ++j) cut2 = std::max(cut2, ed.free->axis(j).cutoff2);
  const auto sigma = [&](double l) {
    return std::exp(-opts.filter_strength * std::pow(l / cut2, opts.filter_order));
  };
  auto local_spacing = [&](const Vec& c) {
    double h = 0.0;
    for (int j = 0; j < g.dim; ++j) {
      const auto& xs = g.axis_nodes[j];
      auto it = std::lower_bound(xs.begin(), xs.end(), c(j));
      const auto i = std::clamp<std::ptrdiff_t>(it - xs.begin(), 1,
                                                static_cast<std::ptrdiff_t>(xs.size()) - 1);
      h = std::max(h, xs[i] - xs[i - 1]);
    }
    return h;
  };
  WeakTypeReport rep;
  for (const auto& c0 : centers) {
    const Vec c = g.nodes[nearest_node(g, c0)];
    for (double r : radii) {
      Vec b = Vec::Zero(static_cast<Eigen::Index>(g.size()));
      for (std::size_t i = 0; i < g.size(); ++i)
        if ((g.nodes[i] - c).norm() <= r) b(static_cast<Eigen::Index>(i)) = 1.0;
      WeakTypeRow row;
      row.center = c;
      row.radius = r;
      row.under_resolved = r < 3.0 * local_spacing(c);
      Vec f = spectral_apply(ed, sigma, b);
      const double l1 = f.cwiseAbs().cwiseProduct(g.mu).sum();
      if (l1 > 0.0) row.sup = weak_type_sup(g, riesz_apply(ed, axis, Vec(f / l1)));
      if (!row.under_resolved) rep.sup = std::max(rep.sup, row.sup);
      rep.rows.push_back(row);
    }
  }
  return rep;
}

WeightedEstimateReport weighted_estimate_report(const EigenDecomp& ed,
                                                const WeightedEstimateOptions& opts) {
  const auto& g = *ed.grid;
  const auto& rs = g.rs;
  const int d = g.dim;
  const double expo = gamma_k(rs) + 0.5 * d + 1.0;
  const auto active = generate_group(rs.active_part());
  WeightedEstimateReport rep;

  auto column_derivative = [&](double t, int iy) {
    const Mat w = schrodinger_kernel(ed, t);
    const Vec col = w.col(iy);
    return real_part(dunkl_derivative(g, opts.axis, CVec(col.cast<std::complex<double>>())));
  };

  for (double yv : opts.y_list) {
    Vec y = Vec::Zero(d);
    y(0) = yv;
    const int iy = nearest_node(g, y);
    const Vec ys = g.nodes[iy];
    double lo = 1e300, hi = 0.0;
    for (double t : opts.t_list) {
      const Vec tw = column_derivative(t, iy);
      const double rt = std::sqrt(t);
      double acc = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const double p = phi(rs, g.nodes[i] / rt, ys / rt, 1.0, opts.phi_nodes).value;
        acc += tw(ii) * tw(ii) * p * g.mu(ii);
      }
      const double val = std::pow(t, expo) * acc;
      rep.eq01.push_back({t, ys(0), val});
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
    rep.eq01_variation = std::max(rep.eq01_variation, hi / lo);

    for (double s : opts.s_list) {
      const Vec tw = column_derivative(s, iy);
      for (double t : opts.t_list) {
        double acc = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
          if (chamber_distance(active, g.nodes[i], ys) > std::sqrt(t))
            acc += std::abs(tw(static_cast<Eigen::Index>(i))) * g.mu(static_cast<Eigen::Index>(i));
        rep.eq02.push_back({t, s, ys(0), acc});
      }
    }
  }

  // log(I sqrt s) = log C - c sqrt(t/s), least squares over rows above round-off
  double peak = 0.0;
  for (const auto& r : rep.eq02) peak = std::max(peak, r.value * std::sqrt(r.s));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rep.eq02) {
    const double v = r.value * std::sqrt(r.s);
    if (!(v > 1e-10 * peak)) continue;
    const double x = std::sqrt(r.t / r.s), yl = std::log(v);
    sx += x;
    sy += yl;
    sxx += x * x;
    sxy += x * yl;
    ++n;
  }
  rep.eq02_used = n;
  if (n >= 3) {
    rep.eq02_c = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
    double logC = -1e300;
    for (const auto& r : rep.eq02) {
      const double v = r.value * std::sqrt(r.s);
      if (v > 0.0) logC = std::max(logC, std::log(v) + rep.eq02_c * std::sqrt(r.t / r.s));
    }
    rep.eq02_C = std::exp(logC);
  }
  return rep;
}

double scaling_identity_gap(const QuadratureGrid& g, const Potential& v, double t,
                            const BoxOptions& opts) {
  require(t > 0.0, ErrorKind::Input, "schrodinger", "time must be positive");
  const double rt = std::sqrt(t);
  auto g0 = build_grid(g.rs, g.R, g.n_axis, g.panels);
  auto g1 = build_grid(g.rs, g.R / rt, g.n_axis, g.panels);
  auto free0 = std::make_shared<const BoxLaplacian>(g0, opts);
  auto free1 = std::make_shared<const BoxLaplacian>(g1, opts);
  Vec v1(static_cast<Eigen::Index>(g1->size()));
  for (std::size_t i = 0; i < g1->size(); ++i)
    v1(static_cast<Eigen::Index>(i)) = t * v(Vec(rt * g1->nodes[i]));
  const Mat w0 = schrodinger_kernel(eig(assemble_L(free0, sample_potential(v, *g0))), t);
  const Mat w1 = schrodinger_kernel(eig(assemble_L(free1, v1)), 1.0);
  const double scale = std::pow(t, -0.5 * g.dim - gamma_k(g.rs));
  return (w0 - scale * w1).cwiseAbs().maxCoeff() / w0.cwiseAbs().maxCoeff();
}

}  // namespace dunkl
