#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/potential.hpp"
#include "dunkl/schrodinger.hpp"

namespace dunkl {

enum class KatoForm { Classical, Orbit };
enum class Verdict { Kato, NotKato, Inconclusive };
const char* to_string(Verdict v);

/// G_d(r): r^{2-d} for d >= 3, ln(1/r) for d = 2 (r clamped at 1e-12), 1 for d = 1.
double kato_kernel(int d, double r);

struct ProbeOptions {
  double box = 4.0;    // lattice on [-box, box]^d
  int per_axis = 17;   // lattice points per axis (d = 1); d >= 2 uses about its square root
};

/// Lattice plus the origin plus the declared singular points of V.
std::vector<Vec> probe_points(const Potential& v, int d, const ProbeOptions& opts = {});

/// int_{dist <= t} G_d(dist) |V(y)| dy at one probe x, dist = |x - y| or |x+ - y+|.
/// The orbit form uses the active group (roots with k > 0).
double kato_integral(const RootSystem& rs, const Potential& v, const Vec& x, double t,
                     KatoForm form);

struct ModulusValue {
  double value = 0.0;
  Vec argmax;
  int probes = 0;
};

ModulusValue kato_modulus(const RootSystem& rs, const Potential& v, double t, KatoForm form,
                          const std::vector<Vec>& probes);

struct KatoEquivalenceRow {
  double t = 0.0;
  double classical = 0.0;    // sup over probes
  double orbit = 0.0;        // sup over probes
  double orbit_sum = 0.0;    // |G| times the sup of the classical integral over orbit points
  double min_lower_slack = 0.0;  // min over probes of orbit(x) - classical(x)
  double min_upper_slack = 0.0;  // min over probes of sum_g classical(g x+) - orbit(x)
};

std::vector<KatoEquivalenceRow> kato_equivalence_check(const RootSystem& rs, const Potential& v,
                                                       const std::vector<double>& t_list,
                                                       const std::vector<Vec>& probes);

/// (e^{-sA_k}|V|)(x) = int K_s(x, y) |V(y)| dmu_k(y). d <= 2.
double heat_average(const RootSystem& rs, const Potential& v, const Vec& x, double s);

struct HeatModulusValue {
  double value = 0.0;  // sup_x int_0^t e^{-sA_k}|V|(x) ds
  Vec argmax;
  int probes = 0;
  // split at |x+ - y+| = beta = (d t / 2c)^{1/2d} at the maximizing probe;
  // beta = 0 when t >= c/d, where the split is undefined
  double beta = 0.0;
  double near = 0.0;
  double far = 0.0;
};

HeatModulusValue heat_modulus(const RootSystem& rs, const Potential& v, double t,
                              const std::vector<Vec>& probes, double gaussian_c = 0.25);

struct ResolventRow {
  double a = 0.0;
  double value = 0.0;  // ||(A_k + a)^{-1} |V| ||_inf over probes
  double bound = 0.0;  // (1 - e^{-1})^{-1} heat_modulus(1/a)
};

std::vector<ResolventRow> resolvent_decay(const RootSystem& rs, const Potential& v,
                                          const std::vector<double>& a_list,
                                          const std::vector<Vec>& probes);

struct GrowthRow {
  double r = 0.0;
  double integral = 0.0;  // sup_x int_{|x+ - y+| <= r} |V| dy
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  double C = 0.0;  // max integral / (r + 1)^d
};

GrowthReport growth_bound_check(const RootSystem& rs, const Potential& v,
                                const std::vector<double>& r_list, const std::vector<Vec>& probes);

struct KatoReport {
  int d = 0;
  std::map<double, double> modulus_classical;
  std::map<double, double> modulus_orbit;
  std::map<double, double> heat;
  Verdict verdict = Verdict::Inconclusive;
  int probes = 0;
};

struct KatoOptions {
  std::vector<double> heat_t{1.0, 0.3, 0.1, 0.03};
  std::vector<double> modulus_t{1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001, 3e-4, 1e-4, 3e-5, 1e-5};
  ProbeOptions probes;
};

/// Kato if the heat modulus drops by 4x or more from its first to its last
/// time and the classical modulus decreases monotonically to below 10% of its
/// first value; NotKato if either grows or ends above 50%; Inconclusive
/// otherwise.
KatoReport classify(const RootSystem& rs, const Potential& v, const KatoOptions& opts = {});

struct SmoothingReport {
  double t = 0.0;
  double norm_1_1 = 0.0;      // max column mu-sum
  double norm_inf_inf = 0.0;  // max row mu-sum
  double norm_1_inf = 0.0;    // max entry
  double norm_2_2 = 0.0;      // direct: e^{-t lambda_min}
  struct Entry {
    double p, q, value;
  };
  std::vector<Entry> interpolated;
};

/// Corner norms of W_t from its kernel and Riesz-Thorin interpolation for
/// 1 <= p <= q <= inf: with a = 1/q, c = 1/p - 1/q, b = 1 - 1/p the bound is
/// |W|_{1,1}^a |W|_{inf,inf}^b |W|_{1,inf}^c.
SmoothingReport smoothing_norms(const EigenDecomp& ed, double t,
                                const std::vector<std::pair<double, double>>& pq_list);

double riesz_thorin(const SmoothingReport& r, double p, double q);

}  // namespace dunkl
