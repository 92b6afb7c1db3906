#pragma once

#include <vector>

#include <Eigen/Dense>

namespace dunkl {

/// Hot loops come in two flavors: a plain serial reference and an OpenMP
/// version. Both produce bitwise-identical results (each output entry is
/// computed by the same instruction sequence); tests compare them and the
/// benchmark target times them.
enum class Exec { Serial, Parallel };

/// Phi_{nm} = c^{-1} E(x_m, -i xi_n) mu_m for one axis with multiplicity kappa.
Eigen::MatrixXcd axis_transform_matrix(double kappa, const std::vector<double>& nodes,
                                       const std::vector<double>& mu, double c,
                                       Exec exec = Exec::Parallel);

/// y = M v, rows distributed over threads.
Eigen::VectorXcd apply_dense(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v,
                             Exec exec = Exec::Parallel);
Eigen::VectorXd apply_dense(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                            Exec exec = Exec::Parallel);

/// One-axis transition density of the free heat flow, mass one against
/// 2^kappa |y|^{2 kappa} dy, tabulated on nodes x (rows) by y (columns).
Eigen::MatrixXd axis_heat_table(double kappa, double t, const std::vector<double>& x,
                                const std::vector<double>& y, Exec exec = Exec::Parallel);

/// Same density at a single pair.
double axis_heat(double kappa, double t, double x, double y);

}  // namespace dunkl
