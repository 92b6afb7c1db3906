#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl {

/// Nonnegative potential. Presets:
///   zero
///   constant(c)
///   soft_coulomb(a)            1 / (a + |x|^2)
///   inverse_power(beta, cutoff) |x|^{-beta} on |x| <= cutoff
///   bump(h, w, c0, c1)          (defaults 1, 2, 0, 0) h exp(1 - 1/(1 - |x - c|^2/w^2)) on |x - c| < w
/// A potential read from CSV is interpolated (piecewise linear in d = 1,
/// nearest sample otherwise) and zero outside the sampled box.
struct Potential {
  std::string name;
  std::map<std::string, double> params;
  std::function<double(const Vec&)> fn;
  std::vector<Vec> singular_points;
  double support = std::numeric_limits<double>::infinity();  // V = 0 for |x| beyond this
  bool g_invariant = true;  // invariant under every coordinate sign flip

  double operator()(const Vec& x) const { return fn(x); }
};

Potential make_potential(const std::string& name, const std::map<std::string, double>& params,
                         int dim);

/// Columns x0..x{d-1}, value; header line optional.
Potential potential_from_csv(std::istream& is, int dim);

/// Samples V on the grid; rejects negative or non-finite values.
Vec sample_potential(const Potential& v, const QuadratureGrid& g);

std::vector<std::string> potential_presets();

}  // namespace dunkl
