#include "dunkl/kato.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Kato:
      return "Kato";
    case Verdict::NotKato:
      return "NotKato";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

double kato_kernel(int d, double r) {
  if (d == 1) return 1.0;
  const double rr = std::max(r, 1e-12);
  if (d == 2) return std::log(1.0 / rr);
  return std::pow(rr, 2.0 - d);
}

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Vec> orbit_points(const RootSystem& rs, const Vec& x) {
  const RootSystem act = rs.active_part();
  if (act.positive_roots().empty()) return {x};
  const auto g = generate_group(act);
  std::vector<Vec> out;
  for (const auto& m : g.elements()) {
    const Vec y = m * x;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Vec& z) { return (z - y).norm() < 1e-12; });
    if (!seen) out.push_back(y);
  }
  return out;
}

double orbit_dist(const std::vector<Vec>& orbit, const Vec& y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : orbit) best = std::min(best, (p - y).norm());
  return best;
}

enum class Weight { Kato, Unit };

// int over B(p, t) intersected with the Voronoi cell of orbit[i] of
// w(|y - p|) |V(y)| dy, in polar coordinates around p.
double cell_integral(const Potential& v, const std::vector<Vec>& orbit, std::size_t i, double t,
                     Weight wk) {
  const Vec& p = orbit[i];
  const int d = static_cast<int>(p.size());
  require(d >= 1 && d <= 3, ErrorKind::Capability, "kato", "ball integrals need d <= 3");

  auto owned = [&](const Vec& y) {
    const double di = (y - p).squaredNorm();
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      if (j == i) continue;
      const double dj = (y - orbit[j]).squaredNorm();
      if (j < i ? dj <= di : dj < di) return false;
    }
    return true;
  };

  bool centre_singular = d == 2 && wk == Weight::Kato;
  for (const auto& s : v.singular_points)
    if ((s - p).norm() < 1e-12) centre_singular = true;

  IntegrationOptions ropts;
  ropts.points = d == 3 ? 10 : 16;
  ropts.panels = 2;

  auto radial = [&](const Vec& w) {
    std::vector<double> brk;
    std::vector<double> sing;
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      if (j == i) continue;
      const Vec q = orbit[j];
      const double den = w.dot(p - q);
      if (std::abs(den) > 1e-14) brk.push_back((p.squaredNorm() - p.dot(q)) / den);
    }
    for (const auto& s : v.singular_points) {
      const double rho = (s - p).dot(w);
      if ((p + rho * w - s).norm() < 1e-9) sing.push_back(rho);
      else brk.push_back(rho);
    }
    if (std::isfinite(v.support)) {
      // |p + rho w| = support
      const double b = p.dot(w);
      const double disc = b * b - (p.squaredNorm() - v.support * v.support);
      if (disc > 0) {
        brk.push_back(-b - std::sqrt(disc));
        brk.push_back(-b + std::sqrt(disc));
      }
    }
    if (centre_singular) sing.push_back(0.0);
    const auto rule = composite_rule(0.0, t, brk, sing, ropts);
    double acc = 0.0;
    for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
      const double rho = rule.nodes[n];
      const Vec y = p + rho * w;
      if (!owned(y)) continue;
      const double val = std::abs(v(y));
      if (val == 0.0) continue;
      const double ker = wk == Weight::Kato ? kato_kernel(d, rho) : 1.0;
      acc += rule.weights[n] * ker * val * std::pow(rho, d - 1);
    }
    return acc;
  };

  if (d == 1) {
    Vec w(1);
    w(0) = 1.0;
    double total = radial(w);
    w(0) = -1.0;
    return total + radial(w);
  }

  // off-centre singular points inside the ball set the angular grading
  std::vector<Vec> inside;
  for (const auto& s : v.singular_points) {
    const double r = (s - p).norm();
    if (r > 1e-12 && r < t) inside.push_back(s);
  }

  if (d == 2) {
    std::vector<double> sing;
    for (const auto& s : inside) {
      double a = std::atan2(s(1) - p(1), s(0) - p(0));
      if (a < 0) a += 2 * kPi;
      sing.push_back(a);
    }
    IntegrationOptions aopts;
    aopts.points = 16;
    aopts.panels = 8;
    aopts.floor = 1e-8;
    const auto rule = composite_rule(0.0, 2 * kPi, {}, sing, aopts);
    double total = 0.0;
    for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
      Vec w(2);
      w << std::cos(rule.nodes[n]), std::sin(rule.nodes[n]);
      total += rule.weights[n] * radial(w);
    }
    return total;
  }

  // d = 3: polar axis toward the first interior singular point
  Vec e = Vec::Unit(3, 2);
  if (!inside.empty()) e = (inside.front() - p).normalized();
  Vec u = std::abs(e(0)) < 0.9 ? Vec(Vec::Unit(3, 0)) : Vec(Vec::Unit(3, 1));
  u = (u - u.dot(e) * e).normalized();
  Eigen::Vector3d e3 = e, u3 = u;
  const Vec w3 = e3.cross(u3);
  IntegrationOptions copts;
  copts.points = 10;
  copts.panels = 4;
  copts.floor = 1e-8;
  QuadratureRule cr;
  if (inside.empty()) {
    cr = composite_rule(-1.0, 1.0, {}, {}, copts);
  } else {
    // graded toward c = 1, the direction of the singular point
    const auto& gl = gauss_legendre(copts.points);
    double outer = 2.0;
    while (outer > copts.floor) {
      const double inner = outer * 0.15;
      const double a = 1.0 - outer, b = 1.0 - inner;
      for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
        cr.nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * gl.nodes[k]);
        cr.weights.push_back(0.5 * (b - a) * gl.weights[k]);
      }
      outer = inner;
    }
  }
  const int nphi = 24;
  double total = 0.0;
  for (std::size_t n = 0; n < cr.nodes.size(); ++n) {
    const double c = cr.nodes[n];
    const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
    double ring = 0.0;
    for (int m = 0; m < nphi; ++m) {
      const double phi = 2 * kPi * (m + 0.5) / nphi;
      const Vec w = c * e + sn * (std::cos(phi) * u + std::sin(phi) * w3);
      ring += radial(w);
    }
    total += cr.weights[n] * ring * 2 * kPi / nphi;
  }
  return total;
}

double ball_integral(const RootSystem& rs, const Potential& v, const Vec& x, double t,
                     KatoForm form, Weight wk) {
  require(t > 0.0, ErrorKind::Input, "kato", "radius must be positive");
  require(x.size() == rs.dimension(), ErrorKind::Input, "kato", "probe dimension mismatch");
  const auto orbit = form == KatoForm::Classical ? std::vector<Vec>{x} : orbit_points(rs, x);
  double total = 0.0;
  for (std::size_t i = 0; i < orbit.size(); ++i) total += cell_integral(v, orbit, i, t, wk);
  return total;
}

ModulusValue sup_over(const std::vector<Vec>& probes, const std::function<double(const Vec&)>& f) {
  require(!probes.empty(), ErrorKind::Input, "kato", "no probe points");
  std::vector<double> vals(probes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < probes.size(); ++i) vals[i] = f(probes[i]);
  const auto it = std::max_element(vals.begin(), vals.end());
  ModulusValue out;
  out.value = *it;
  out.argmax = probes[static_cast<std::size_t>(it - vals.begin())];
  out.probes = static_cast<int>(probes.size());
  return out;
}

void require_heat(const RootSystem& rs) {
  require(rs.kind() == GroupKind::Z2Product, ErrorKind::Capability, "kato",
          "heat averages need the product group");
  require(rs.dimension() <= 2, ErrorKind::Capability, "kato", "heat averages need d <= 2");
}

struct Split {
  double total = 0.0;
  double near = 0.0;
};

// int K_s(x, y) |V(y)| dmu_k(y) by a tensor rule; near collects |x+ - y+| <= beta.
Split heat_average_split(const RootSystem& rs, const Potential& v, const Vec& x, double s,
                         double beta) {
  require_heat(rs);
  const int d = rs.dimension();
  const auto& k = rs.axis_multiplicities();
  const double w = std::sqrt(s);
  IntegrationOptions opts;
  opts.points = d == 1 ? 12 : 6;
  opts.panels = d == 1 ? 2 : 1;
  opts.floor = 1e-12;

  std::vector<std::vector<double>> ys(d), ws(d);
  for (int j = 0; j < d; ++j) {
    const double xj = x(j);
    double span = std::abs(xj) + 13.0 * w;
    if (std::isfinite(v.support)) span = std::min(span, v.support);
    std::vector<double> brk{0.0};
    // with k_j = 0 the axis kernel is a plain Gaussian around x_j
    std::vector<double> centres{xj};
    if (k[j] > 0) centres.push_back(-xj);
    for (double c : centres)
      for (double m : {0.0, 1.5, 3.0, 5.0, 7.5, 10.0, 13.0}) {
        brk.push_back(c - m * w);
        brk.push_back(c + m * w);
      }
    if (beta > 0)
      for (double c : centres) {
        brk.push_back(c - beta);
        brk.push_back(c + beta);
      }
    std::vector<double> sing;
    for (const auto& sp : v.singular_points) sing.push_back(sp(j));
    const auto rule = composite_rule(-span, span, brk, sing, opts);
    for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
      const double y = rule.nodes[n];
      const double kw = axis_heat(k[j], s, xj, y) * std::pow(2.0, k[j]) *
                        std::pow(std::abs(y), 2.0 * k[j]);
      if (kw == 0.0) continue;
      ys[j].push_back(y);
      ws[j].push_back(rule.weights[n] * kw);
    }
  }

  const auto orbit = beta > 0 ? orbit_points(rs, x) : std::vector<Vec>{};
  Split out;
  Vec y(d);
  auto add = [&](double wt) {
    const double val = wt * std::abs(v(y));
    out.total += val;
    if (beta > 0 && orbit_dist(orbit, y) <= beta) out.near += val;
  };
  if (d == 1) {
    for (std::size_t a = 0; a < ys[0].size(); ++a) {
      y(0) = ys[0][a];
      add(ws[0][a]);
    }
  } else {
    for (std::size_t a = 0; a < ys[0].size(); ++a) {
      y(0) = ys[0][a];
      for (std::size_t b = 0; b < ys[1].size(); ++b) {
        y(1) = ys[1][b];
        add(ws[0][a] * ws[1][b]);
      }
    }
  }
  return out;
}

QuadratureRule time_rule(double t, int d) {
  IntegrationOptions opts;
  opts.points = d == 1 ? 8 : 6;
  opts.panels = 2;
  opts.floor = 1e-10 * t;
  const double sing[] = {0.0};
  return composite_rule(0.0, t, {}, sing, opts);
}

double time_integral(const RootSystem& rs, const Potential& v, const Vec& x, double t) {
  const auto rule = time_rule(t, rs.dimension());
  double acc = 0.0;
  for (std::size_t n = 0; n < rule.nodes.size(); ++n)
    acc += rule.weights[n] * heat_average_split(rs, v, x, rule.nodes[n], -1.0).total;
  return acc;
}

bool monotone_down(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1] * (1.0 + 1e-9) + 1e-300) return false;
  return true;
}

}  // namespace

std::vector<Vec> probe_points(const Potential& v, int d, const ProbeOptions& opts) {
  require(d >= 1 && d <= 3, ErrorKind::Capability, "kato", "probes need d <= 3");
  require(opts.per_axis >= 2 && opts.box > 0, ErrorKind::Input, "kato", "bad probe lattice");
  int m = opts.per_axis;
  if (d == 2) m = opts.per_axis / 2 + 1;
  if (d == 3) m = std::max(3, opts.per_axis / 4 + 1);
  std::vector<Vec> out;
  std::vector<int> idx(d, 0);
  while (true) {
    Vec p(d);
    for (int j = 0; j < d; ++j) p(j) = -opts.box + 2.0 * opts.box * idx[j] / (m - 1);
    out.push_back(p);
    int j = 0;
    while (j < d && ++idx[j] == m) idx[j++] = 0;
    if (j == d) break;
  }
  out.push_back(Vec::Zero(d));
  for (const auto& s : v.singular_points)
    if (s.size() == d) out.push_back(s);
  std::vector<Vec> uniq;
  for (const auto& p : out)
    if (std::none_of(uniq.begin(), uniq.end(), [&](const Vec& q) { return (p - q).norm() < 1e-12; }))
      uniq.push_back(p);
  return uniq;
}

double kato_integral(const RootSystem& rs, const Potential& v, const Vec& x, double t,
                     KatoForm form) {
  return ball_integral(rs, v, x, t, form, Weight::Kato);
}

ModulusValue kato_modulus(const RootSystem& rs, const Potential& v, double t, KatoForm form,
                          const std::vector<Vec>& probes) {
  return sup_over(probes, [&](const Vec& x) { return kato_integral(rs, v, x, t, form); });
}

std::vector<KatoEquivalenceRow> kato_equivalence_check(const RootSystem& rs, const Potential& v,
                                                       const std::vector<double>& t_list,
                                                       const std::vector<Vec>& probes) {
  require(!probes.empty(), ErrorKind::Input, "kato", "no probe points");
  std::vector<KatoEquivalenceRow> rows;
  for (double t : t_list) {
    const std::size_t n = probes.size();
    std::vector<double> cl(n), orb(n), sum(n), cl_max(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = probes[i];
      cl[i] = kato_integral(rs, v, x, t, KatoForm::Classical);
      orb[i] = kato_integral(rs, v, x, t, KatoForm::Orbit);
      double s = 0.0, mx = 0.0;
      for (const auto& p : orbit_points(rs, x)) {
        const double c = kato_integral(rs, v, p, t, KatoForm::Classical);
        s += c;
        mx = std::max(mx, c);
      }
      sum[i] = s;
      cl_max[i] = mx;
    }
    KatoEquivalenceRow r;
    r.t = t;
    r.classical = *std::max_element(cl.begin(), cl.end());
    r.orbit = *std::max_element(orb.begin(), orb.end());
    const double gsize = static_cast<double>(orbit_points(rs, Vec::Constant(rs.dimension(), 0.37)).size());
    r.orbit_sum = gsize * *std::max_element(cl_max.begin(), cl_max.end());
    r.min_lower_slack = std::numeric_limits<double>::infinity();
    r.min_upper_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      r.min_lower_slack = std::min(r.min_lower_slack, orb[i] - cl[i]);
      r.min_upper_slack = std::min(r.min_upper_slack, sum[i] - orb[i]);
    }
    rows.push_back(r);
  }
  return rows;
}

double heat_average(const RootSystem& rs, const Potential& v, const Vec& x, double s) {
  require(s > 0.0, ErrorKind::Input, "kato", "time must be positive");
  return heat_average_split(rs, v, x, s, -1.0).total;
}

HeatModulusValue heat_modulus(const RootSystem& rs, const Potential& v, double t,
                              const std::vector<Vec>& probes, double gaussian_c) {
  require(t > 0.0, ErrorKind::Input, "kato", "time must be positive");
  require_heat(rs);
  const auto m = sup_over(probes, [&](const Vec& x) { return time_integral(rs, v, x, t); });
  HeatModulusValue out;
  out.value = m.value;
  out.argmax = m.argmax;
  out.probes = m.probes;
  const int d = rs.dimension();
  if (gaussian_c > 0 && t < gaussian_c / d) {
    out.beta = std::pow(d * t / (2.0 * gaussian_c), 1.0 / (2.0 * d));
    const auto rule = time_rule(t, d);
    for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
      const auto sp = heat_average_split(rs, v, m.argmax, rule.nodes[n], out.beta);
      out.near += rule.weights[n] * sp.near;
      out.far += rule.weights[n] * (sp.total - sp.near);
    }
  }
  return out;
}

std::vector<ResolventRow> resolvent_decay(const RootSystem& rs, const Potential& v,
                                          const std::vector<double>& a_list,
                                          const std::vector<Vec>& probes) {
  require_heat(rs);
  std::vector<ResolventRow> rows;
  for (double a : a_list) {
    require(a > 0.0, ErrorKind::Input, "kato", "resolvent parameter must be positive");
    IntegrationOptions opts;
    opts.points = rs.dimension() == 1 ? 8 : 6;
    opts.panels = rs.dimension() == 1 ? 2 : 1;
    opts.floor = 1e-10 / a;
    const double brk[] = {1.0 / a, 5.0 / a, 10.0 / a, 20.0 / a};
    const double sing[] = {0.0};
    const auto rule = composite_rule(0.0, 40.0 / a, brk, sing, opts);
    const auto m = sup_over(probes, [&](const Vec& x) {
      double acc = 0.0;
      for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
        const double s = rule.nodes[n];
        acc += rule.weights[n] * std::exp(-a * s) * heat_average_split(rs, v, x, s, -1.0).total;
      }
      return acc;
    });
    ResolventRow r;
    r.a = a;
    r.value = m.value;
    r.bound = heat_modulus(rs, v, 1.0 / a, probes, 0.0).value / (1.0 - std::exp(-1.0));
    rows.push_back(r);
  }
  return rows;
}

GrowthReport growth_bound_check(const RootSystem& rs, const Potential& v,
                                const std::vector<double>& r_list, const std::vector<Vec>& probes) {
  GrowthReport out;
  const int d = rs.dimension();
  for (double r : r_list) {
    const auto m = sup_over(probes, [&](const Vec& x) {
      return ball_integral(rs, v, x, r, KatoForm::Orbit, Weight::Unit);
    });
    out.rows.push_back({r, m.value});
    out.C = std::max(out.C, m.value / std::pow(r + 1.0, d));
  }
  return out;
}

KatoReport classify(const RootSystem& rs, const Potential& v, const KatoOptions& opts) {
  require(!opts.modulus_t.empty(), ErrorKind::Input, "kato", "empty modulus time list");
  KatoReport rep;
  rep.d = rs.dimension();
  const auto probes = probe_points(v, rep.d, opts.probes);
  rep.probes = static_cast<int>(probes.size());
  std::vector<double> def, heat;
  for (double t : opts.modulus_t) {
    const double c = kato_modulus(rs, v, t, KatoForm::Classical, probes).value;
    rep.modulus_classical[t] = c;
    rep.modulus_orbit[t] = kato_modulus(rs, v, t, KatoForm::Orbit, probes).value;
    def.push_back(c);
  }
  const bool heat_ok = rs.kind() == GroupKind::Z2Product && rep.d <= 2;
  if (heat_ok)
    for (double t : opts.heat_t) {
      const double h = heat_modulus(rs, v, t, probes, 0.0).value;
      rep.heat[t] = h;
      heat.push_back(h);
    }

  auto grows = [](const std::vector<double>& s) { return !s.empty() && s.back() > s.front(); };
  auto above_half = [](const std::vector<double>& s) {
    return !s.empty() && s.front() > 0 && s.back() > 0.5 * s.front();
  };
  const bool zero = def.front() == 0.0 && (heat.empty() || heat.front() == 0.0);
  if (zero) {
    rep.verdict = Verdict::Kato;
  } else if (grows(def) || above_half(def) || grows(heat) || above_half(heat)) {
    rep.verdict = Verdict::NotKato;
  } else {
    const bool heat_drop = heat.empty() || heat.front() >= 4.0 * heat.back();
    const bool def_drop = monotone_down(def) && def.back() < 0.1 * def.front();
    rep.verdict = heat_drop && def_drop ? Verdict::Kato : Verdict::Inconclusive;
  }
  return rep;
}

SmoothingReport smoothing_norms(const EigenDecomp& ed, double t,
                                const std::vector<std::pair<double, double>>& pq_list) {
  const Mat w = schrodinger_kernel(ed, t).cwiseAbs();
  const Vec& mu = ed.grid->mu;
  SmoothingReport r;
  r.t = t;
  r.norm_1_inf = w.maxCoeff();
  r.norm_inf_inf = (w * mu).maxCoeff();
  r.norm_1_1 = (w.transpose() * mu).maxCoeff();
  r.norm_2_2 = std::exp(-t * ed.lambda_min());
  for (const auto& [p, q] : pq_list) r.interpolated.push_back({p, q, riesz_thorin(r, p, q)});
  return r;
}

double riesz_thorin(const SmoothingReport& r, double p, double q) {
  require(p >= 1.0 && q >= p, ErrorKind::Input, "kato", "need 1 <= p <= q <= inf");
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
  const double a = iq, c = ip - iq, b = 1.0 - ip;
  auto pw = [](double base, double e) { return e == 0.0 ? 1.0 : std::pow(base, e); };
  return pw(r.norm_1_1, a) * pw(r.norm_inf_inf, b) * pw(r.norm_1_inf, c);
}

}  // namespace dunkl
