#pragma once

#include <memory>
#include <vector>

#include "dunkl/box.hpp"
#include "dunkl/potential.hpp"

namespace dunkl {

/// L_k = A_k + V in the symmetric form D^{1/2} L D^{-1/2}.
struct DiscreteOperator {
  Mat matrix;
  std::shared_ptr<const BoxLaplacian> free;
  Vec potential;                 // V on the grid
  double symmetry_defect = 0.0;  // max |H - H^T| before symmetrization
  const QuadratureGrid& grid() const { return free->grid(); }
};

DiscreteOperator assemble_L(std::shared_ptr<const BoxLaplacian> free, const Vec& v);

struct EigenDecomp {
  Vec values;    // nondecreasing
  Mat vectors;   // orthonormal columns in the symmetric form
  std::shared_ptr<const QuadratureGrid> grid;
  std::shared_ptr<const BoxLaplacian> free;
  double reconstruction_defect = 0.0;  // relative, Frobenius
  double orthogonality_defect = 0.0;
  double lambda_min() const { return values(0); }
};

EigenDecomp eig(const DiscreteOperator& h);

/// f(L) u for a spectral function f, on plain samples.
Vec spectral_apply(const EigenDecomp& ed, const std::function<double(double)>& f, const Vec& u);

/// W_t f = e^{-t L} f. t = 0 returns f untouched.
Vec semigroup_apply(const EigenDecomp& ed, double t, const Vec& f);

/// (e^{-tA/n} e^{-tV/n})^n f with the free semigroup of the same discretization.
Vec semigroup_trotter(const DiscreteOperator& h, double t, int n_steps, const Vec& f);

/// W_t(x_m, x_n).
Mat schrodinger_kernel(const EigenDecomp& ed, double t);

inline constexpr double kDefaultSpectralFloor = 1e-8;

/// L^{-1/2} f. Throws a Numerical error when lambda_min is below the floor.
Vec inv_sqrt_apply(const EigenDecomp& ed, const Vec& f, double floor = kDefaultSpectralFloor);

struct SubordinationSpec {
  int nodes = 200;   // requested; the spacing is rounded to ln 2 / k
  double u_min = -30.0;
  double u_max = 30.0;
};

struct SubordinationResult {
  Vec value;
  int nodes = 0;          // actually used
  double spacing = 0.0;
  double error_estimate = 0.0;  // max-norm gap to the rule on every other node
};

/// (1/sqrt(pi)) int_0^inf e^{-sL} f s^{-1/2} ds with s = e^u and the
/// trapezoid rule. Nodes are spaced by ln 2 / k so that e^{-s L} at node
/// i + k is the square of the one at node i; only the first k exponentials
/// are computed directly.
SubordinationResult inv_sqrt_subordination(const DiscreteOperator& h, const Vec& f,
                                           const SubordinationSpec& spec = {});

/// R_j f = T_j L^{-1/2} f. The derivative acts on the resolved-mode part of
/// L^{-1/2} f; the penalized complement has no meaningful derivative on the grid.
Vec riesz_apply(const EigenDecomp& ed, int axis, const Vec& f, int fd_order = 6);

/// Upper bound of the weak-type ratio sup_lambda lambda mu{|g| > lambda}.
double weak_type_sup(const QuadratureGrid& g, const Vec& values);

struct WeakTypeRow {
  Vec center;
  double radius = 0.0;
  double sup = 0.0;
  bool under_resolved = false;
};

struct WeakTypeReport {
  std::vector<WeakTypeRow> rows;
  double sup = 0.0;  // over resolved atoms
};

struct WeakTypeOptions {
  /// Atoms are mollified as sigma(L) 1_B with sigma(l) = exp(-strength (l / lambda_cut^2)^order)
  /// and renormalized to grid L^1 norm one. A bare indicator rings at the mode cutoff, and
  /// the ringing is weighted by the large mu_k mass far from the origin.
  double filter_strength = 36.0;
  int filter_order = 2;
};

/// Balls are centered at the grid node nearest each requested center. Radii
/// below three local grid spacings are flagged as under-resolved and left
/// out of the family supremum.
WeakTypeReport weak_type_report(const EigenDecomp& ed, int axis, const std::vector<Vec>& centers,
                                const std::vector<double>& radii, const WeakTypeOptions& opts = {});

struct WeightedEstimateOptions {
  std::vector<double> t_list{0.25, 0.5, 1.0, 2.0, 4.0};
  std::vector<double> s_list{0.05, 0.1, 0.2};
  std::vector<double> y_list{0.0, 0.5, 1.0};  // along axis 0, snapped to the grid
  int axis = 0;
  int phi_nodes = 32;
};

struct WeightedEstimateReport {
  struct Eq01Row {
    double t, y, value;
  };
  struct Eq02Row {
    double t, s, y, value;
  };
  std::vector<Eq01Row> eq01;       // t^{gamma+d/2+1} int |T_j W_t(.,y)|^2 phi(./sqrt t, y/sqrt t)
  double eq01_variation = 0.0;     // max over y of max/min over t
  std::vector<Eq02Row> eq02;
  double eq02_C = 0.0;
  double eq02_c = 0.0;
  int eq02_used = 0;
};

WeightedEstimateReport weighted_estimate_report(const EigenDecomp& ed,
                                                const WeightedEstimateOptions& opts = {});

/// max |W_t(x,y) - t^{-d/2-gamma} W~_1(x/sqrt t, y/sqrt t)| / max |W_t|, where
/// W~ is built on the grid scaled by 1/sqrt t with potential t V(sqrt t .).
double scaling_identity_gap(const QuadratureGrid& g, const Potential& v, double t,
                            const BoxOptions& opts = {});

}  // namespace dunkl
