#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "dunkl/reflection.hpp"

namespace dunkl {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Tensor grid on [-R, R]^d for L^2(mu_k) on a Z2 product. Every axis holds
/// N nodes in +- pairs, none at 0. Flat index is i_0 N^{d-1} + ... + i_{d-1}
/// (axis 0 slowest), matching Kronecker products of per-axis factors.
struct QuadratureGrid {
  RootSystem rs;
  ReflectionGroup group;
  int dim = 0;
  int n_axis = 0;
  double R = 0.0;
  int panels = 1;

  std::vector<std::vector<double>> axis_nodes;  // ascending
  std::vector<std::vector<double>> axis_mu;     // mu_k weight of the axis factor
  std::vector<Vec> nodes;
  Vec mu;

  /// reflection_map[g][i] = index of group.elements()[g] * nodes[i]
  std::vector<std::vector<int>> reflection_map;
  /// index of -nodes[i]
  std::vector<int> negation;
  /// axis_flip[j][i] = index of sigma_j nodes[i] (sign change of coordinate j)
  std::vector<std::vector<int>> axis_flip;

  std::size_t size() const { return nodes.size(); }
  int flat(const std::vector<int>& idx) const;
  std::vector<int> unflat(int i) const;
};

/// Per axis: Gauss-Jacobi nodes for the weight x^{2 kappa} on the first panel
/// [0, R/panels], Gauss-Legendre on the rest, mirrored to the negative side.
std::shared_ptr<const QuadratureGrid> build_grid(const RootSystem& rs, double R, int N,
                                                 int panels = 1);

/// Sample a scalar function on the grid.
Vec sample(const QuadratureGrid& g, const std::function<double(const Vec&)>& f);

/// Integral against mu_k.
double integrate(const QuadratureGrid& g, const Vec& f);
/// Weighted L^p norms; p = infinity gives the max.
double norm(const QuadratureGrid& g, const CVec& f, double p = 2.0);
std::complex<double> inner(const QuadratureGrid& g, const CVec& f, const CVec& h);

/// Sampled-function CSV: columns x0..x{d-1}, weight, value (real part) and
/// an optional imaginary column.
void write_csv(std::ostream& os, const QuadratureGrid& g, const CVec& f);
CVec read_csv(std::istream& is, const QuadratureGrid& g);

}  // namespace dunkl
