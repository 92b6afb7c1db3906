#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace dunkl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A root with |vector|^2 = 2 and its multiplicity k(alpha) >= 0.
struct Root {
  Vec vector;
  double multiplicity = 0.0;
};

enum class GroupKind { Z2Product, Dihedral };

/// Positive roots R+ of a reduced root system together with the multiplicity
/// function. Two families are supported: the product group Z2^d (roots
/// sqrt(2) e_j, one multiplicity per axis) and the dihedral groups I_m in the
/// plane.
class RootSystem {
 public:
  RootSystem() = default;
  static RootSystem z2_product(std::vector<double> axis_multiplicities);
  /// Dihedral group of order 2m. For even m the two root orbits carry
  /// `k_even` and `k_odd`; for odd m there is one orbit and `k_odd` must
  /// equal `k_even`.
  static RootSystem dihedral(int m, double k_even, double k_odd);

  int dimension() const { return dim_; }
  GroupKind kind() const { return kind_; }
  int dihedral_order() const { return m_; }
  const std::vector<Root>& positive_roots() const { return roots_; }

  /// Z2Product only: k_j for the root sqrt(2) e_j.
  const std::vector<double>& axis_multiplicities() const;

  /// Same root system with the zero-multiplicity roots dropped. Its group
  /// is the part of G that the Dunkl structure actually sees.
  RootSystem active_part() const;

 private:
  void validate() const;

  int dim_ = 0;
  GroupKind kind_ = GroupKind::Z2Product;
  int m_ = 0;
  std::vector<Root> roots_;
  std::vector<double> axis_k_;
};

/// Finite orthogonal group generated by the reflections of a root system.
class ReflectionGroup {
 public:
  static constexpr std::size_t kDefaultSizeCap = 1024;
  static constexpr double kDedupTolerance = 1e-10;

  const std::vector<Mat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int dimension() const { return dim_; }
  /// Positive roots the group was generated from (needed for the chamber).
  const std::vector<Root>& roots() const { return roots_; }
  bool is_z2_product() const { return z2_; }

  /// Index of the element within tolerance, or -1.
  int find(const Mat& g) const;

 private:
  friend ReflectionGroup generate_group(const RootSystem& rs, std::size_t size_cap);
  int dim_ = 0;
  bool z2_ = false;
  std::vector<Mat> elements_;
  std::vector<Root> roots_;
};

/// x - <x, alpha> alpha.
Vec reflect(const Root& alpha, const Vec& x);
Mat reflection_matrix(const Root& alpha);

ReflectionGroup generate_group(const RootSystem& rs,
                               std::size_t size_cap = ReflectionGroup::kDefaultSizeCap);

/// prod_{alpha in R+} |<alpha, x>|^{2 k(alpha)}.
double weight(const RootSystem& rs, const Vec& x);

/// gamma_k = sum of multiplicities over R+.
double gamma_k(const RootSystem& rs);

/// Orbit representative in the closed fundamental chamber. Points on a wall
/// are fixed.
Vec canonical_rep(const ReflectionGroup& g, const Vec& x);

/// min_{g in G} |g.x - y|.
double orbit_distance(const ReflectionGroup& g, const Vec& x, const Vec& y);

/// |x+ - y+|, the chamber route to the same quantity.
double chamber_distance(const ReflectionGroup& g, const Vec& x, const Vec& y);

struct BallEstimate {
  double lower = 0.0;
  double upper = 0.0;
};

struct BallConstants {
  double c = 1.0;
  double C = 1.0;
};

/// r^d prod_{alpha in R} (|<x,alpha>| + r)^{k(alpha)}; each positive root
/// appears twice in R (as +alpha and -alpha).
double ball_comparison(const RootSystem& rs, const Vec& x, double r);

/// Bracket [c Q, C Q] around mu_k(B(x, r)) with Q the comparison quantity.
BallEstimate ball_volume(const RootSystem& rs, const Vec& x, double r, BallConstants k);

/// Numeric mu_k(B(x, r)). Exact primitive for d = 1, one-dimensional
/// quadrature for Z2 in d = 2, seeded Monte-Carlo otherwise.
double ball_measure(const RootSystem& rs, const Vec& x, double r, std::uint64_t seed = 7,
                    int mc_samples = 200000);

/// Calibrates (c, C) as (min, max) of mu_k(B)/Q over seeded random (x, r),
/// then widens both by `margin` (c /= margin, C *= margin).
BallConstants calibrate_ball_constants(const RootSystem& rs, int samples, std::uint64_t seed,
                                       double margin = 2.0);

/// Lattice centers a^{j_1..j_d}, with a_i^j = x_i - 2([rd/2]+1)/d + (2j-1)/d,
/// whose unit balls cover B(x, r).
std::vector<Vec> unit_ball_cover(const Vec& x, double r);

/// 2^d ([rd/2]+1)^d.
std::size_t unit_ball_cover_count(int d, double r);

}  // namespace dunkl
