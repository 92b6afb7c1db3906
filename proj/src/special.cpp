#include "dunkl/special.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

// sum_n b_n s^n, b_n = b_{n-1}/(n + 2 kappa [n odd]); split by parity
void series_parts(double kappa, long double s, long double& even, long double& odd,
                  bool alternate) {
  even = 1.0L;
  odd = 0.0L;
  long double b = 1.0L;
  long double p = 1.0L;
  for (int n = 1; n < 4000; ++n) {
    b /= n + ((n & 1) ? 2.0L * kappa : 0.0L);
    p *= s;
    long double term = b * p;
    if (alternate && (n % 4 == 2 || n % 4 == 3)) term = -term;
    if (n & 1)
      odd += term;
    else
      even += term;
    if (n > 2 * std::abs(s) + 10 &&
        std::abs(term) < 1e-20L * (std::abs(even) + std::abs(odd) + 1e-300L))
      break;
  }
}

}  // namespace

double kernel_series(double kappa, double z, const SeriesBounds& bounds) {
  require(std::abs(z) <= bounds.real, ErrorKind::Range, "intertwine",
          "kernel series argument outside the configured bound");
  long double even, odd;
  series_parts(kappa, z, even, odd, false);
  return static_cast<double>(even + odd);
}

std::complex<double> kernel_series_imag(double kappa, double w, const SeriesBounds& bounds) {
  require(std::abs(w) <= bounds.imaginary, ErrorKind::Range, "intertwine",
          "kernel series argument outside the configured bound");
  long double even, odd;
  series_parts(kappa, w, even, odd, true);
  return {static_cast<double>(even), static_cast<double>(odd)};
}

double scaled_kummer(double a, double b, double u) {
  if (u == 0.0) return 1.0;
  if (a == 0.0) return std::exp(-u);
  if (u <= 40.0) {
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int n = 0; n < 2000; ++n) {
      term *= (a + n) * static_cast<long double>(u) / ((b + n) * (n + 1.0L));
      sum += term;
      if (std::abs(term) < 1e-21L * std::abs(sum)) break;
    }
    return static_cast<double>(sum * std::exp(-static_cast<long double>(u)));
  }
  // large u: M(a,b,u) ~ Gamma(b)/Gamma(a) e^u u^{a-b} sum_s (b-a)_s (1-a)_s / (s! u^s)
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int s = 0; s < 200; ++s) {
    const long double next = term * (b - a + s) * (1.0L - a + s) / ((s + 1.0L) * u);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-20L * std::abs(sum)) break;
  }
  const double pre = std::exp(std::lgamma(b) - std::lgamma(a) + (a - b) * std::log(u));
  return pre * static_cast<double>(sum);
}

double kernel_damped(double kappa, double z) {
  if (kappa == 0.0) return z >= 0.0 ? 1.0 : std::exp(2.0 * z);
  const double a = z >= 0.0 ? kappa + 1.0 : kappa;
  return scaled_kummer(a, 2.0 * kappa + 1.0, 2.0 * std::abs(z));
}

double kernel(double kappa, double z) {
  return std::exp(std::abs(z)) * kernel_damped(kappa, z);
}

double normalized_bessel(double nu, double s) {
  s = std::abs(s);
  if (s <= 2.0) {
    const double q = -0.25 * s * s;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 60; ++m) {
      term *= q / (m * (nu + m));
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  if (nu == -0.5) return std::cos(s);
  if (nu == 0.5) return std::sin(s) / s;
  return std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / s)) *
         boost::math::cyl_bessel_j(nu, s);
}

std::complex<double> kernel_imag(double kappa, double w) {
  const double even = normalized_bessel(kappa - 0.5, w);
  const double odd = w / (2.0 * kappa + 1.0) * normalized_bessel(kappa + 0.5, w);
  return {even, odd};
}

double axis_gaussian_mass(double kappa) {
  return std::exp((2.0 * kappa + 0.5) * std::numbers::ln2 + std::lgamma(kappa + 0.5));
}

}  // namespace dunkl
