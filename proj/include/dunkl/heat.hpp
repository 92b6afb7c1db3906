#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dunkl/transform.hpp"

namespace dunkl {

/// TransformConsistent normalizes the kernel to mass one, which is what the
/// transform normalization F(e^{-|x|^2/2}) = e^{-|xi|^2/2} implies. PaperEqKK
/// uses the prefactor 1/(c_k t^{gamma_k + d/2}) as printed; it is larger by
/// 2^{gamma_k + d/2}.
enum class ConstantMode { TransformConsistent, PaperEqKK };

struct HeatKernelEval {
  double t = 0.0;
  double value = 0.0;
  ConstantMode mode = ConstantMode::TransformConsistent;
};

HeatKernelEval heat_kernel(const RootSystem& rs, double t, const Vec& x, const Vec& y,
                           ConstantMode mode = ConstantMode::TransformConsistent);

/// Ratio PaperEqKK / TransformConsistent = 2^{gamma_k + d/2}.
double paper_constant_factor(const RootSystem& rs);

/// K_t(x_m, x_n) on the grid (mass-one normalization).
Mat heat_kernel_matrix(const QuadratureGrid& g, double t, Exec exec = Exec::Parallel);

/// integral of K_t(x, y) d mu_k(y) over R^d by adaptive quadrature.
double heat_kernel_mass(const RootSystem& rs, double t, const Vec& x);

/// e^{-t A_k} f = F^{-1}(e^{-t |xi|^2} F f). t = 0 returns f untouched.
CVec heat_apply(const SpectralMatrix& sm, double t, const CVec& f);

/// integral of K_t(x, y) f(y) d mu_k(y) by grid quadrature.
Vec heat_apply_kernel(const QuadratureGrid& g, double t, const Vec& f);

/// k_t = F^{-1}(e^{-t |xi|^2}) sampled on the grid; k_t *_k k_s = k_{t+s}.
CVec heat_kernel_function(const SpectralMatrix& sm, double t);

struct GaussianFit {
  std::string form;  // "ball", "weight", "homogeneous"
  double C = 0.0;
  double c = 0.0;
  int used = 0;      // samples entering the slope fit
  bool finite = false;
};

struct GaussianBoundReport {
  std::vector<GaussianFit> fits;
  std::vector<GaussianFit> fits_doubled;  // same seed, twice the samples
  double min_kernel = 0.0;
  int samples = 0;
};

/// Fits (C, c) in K_t(x,y) <= C F(x,y,t) e^{-c |x+ - y+|^2 / t} for the
/// three prefactors F: 1/max(mu_k(B(x,sqrt t)), mu_k(B(y,sqrt t))),
/// t^{-d/2}/max(w_k(x), w_k(y)) and t^{-d/2-gamma_k}. c is the negated slope
/// of log(K/F) against |x+ - y+|^2/t over samples with that ratio >= 1, C is
/// the smallest constant making every sample satisfy the bound with that c.
GaussianBoundReport gaussian_bound_report(const RootSystem& rs, const std::vector<double>& t_list,
                                          int sample_pairs, std::uint64_t seed,
                                          double box = 4.0);

}  // namespace dunkl
