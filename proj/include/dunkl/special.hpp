#pragma once

#include <complex>

namespace dunkl {

/// Rank-one special functions for the root sqrt(2) with multiplicity kappa,
/// i.e. weight 2^kappa |x|^{2 kappa}. The rank-one Dunkl kernel depends on
/// x and y only through z = x y.

struct SeriesBounds {
  double real = 50.0;       // |z| above which the real series is refused
  double imaginary = 25.0;  // the alternating series loses digits faster
};

/// E(x, y) from the eigen-recursion power series, evaluated in long double.
/// Throws a range error when |z| exceeds the bound.
double kernel_series(double kappa, double z, const SeriesBounds& bounds = {});

/// E(x, i y) with w = x y from the same series.
std::complex<double> kernel_series_imag(double kappa, double w, const SeriesBounds& bounds = {});

/// E(x, y) through the confluent hypergeometric form; stable for all z.
double kernel(double kappa, double z);

/// E(x, i y) = j_{kappa-1/2}(w) + i w/(2 kappa + 1) j_{kappa+1/2}(w).
std::complex<double> kernel_imag(double kappa, double w);

/// e^{-u} M(a, b, u) for u >= 0.
double scaled_kummer(double a, double b, double u);

/// Normalized Bessel function Gamma(nu+1) (2/s)^nu J_nu(s), equal to 1 at 0.
double normalized_bessel(double nu, double s);

/// Gaussian mass of one axis: integral of e^{-x^2/2} 2^kappa |x|^{2 kappa}.
double axis_gaussian_mass(double kappa);

/// e^{-|z|} E(z), bounded by 1 for all real z. The heat kernel is built
/// from it.
double kernel_damped(double kappa, double z);

}  // namespace dunkl
