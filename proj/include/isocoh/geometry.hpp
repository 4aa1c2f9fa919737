#pragma once

// Curvature of invariant metrics on reductive homogeneous spaces G/K,
// computed at the origin from structure constants with Nomizu's formula.

#include "isocoh/spaces.hpp"

#include <cstdint>
#include <vector>

namespace isocoh {

/// Curvature tolerance used for symmetry and constancy checks.
inline constexpr double kCurvatureTol = 1e-8;

/// A reductive space with the block-diagonal invariant metric obtained by
/// scaling the inner product on each complement block.
struct InvariantMetricSpace {
  ReductiveSpace space;
  std::vector<double> block_scales;  ///< one positive factor per block (default 1)

  explicit InvariantMetricSpace(ReductiveSpace s);
  InvariantMetricSpace(ReductiveSpace s, std::vector<double> scales);

  int dim() const { return space.m_dim(); }
  /// Metric on m in m-coordinates (blocks in order).
  Mat metric() const;
  /// Columns: a metric-orthonormal frame of m in m-coordinates.
  Mat frame() const;
  /// max |ad(k)^T G + G ad(k)| on m.
  double invariance_residual() const;
};

/// R_abcd = <R(f_a, f_b) f_c, f_d> in an orthonormal frame, with
/// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]; sectional curvature is R(X,Y,Y,X).
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(int dim);
  int dim() const { return dim_; }
  double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }
  double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  /// R(x, y, z, w) for frame-coordinate vectors.
  double evaluate(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const;
  double max_abs() const;
  /// Largest violation of antisymmetry in (a,b) and (c,d), pair symmetry and
  /// the first Bianchi identity.
  double symmetry_residual() const;

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d;
  }
  int dim_ = 0;
  std::vector<double> data_;
};

/// Throws std::invalid_argument when k is not a subalgebra, the blocks are
/// not k-invariant, or the metric is not invariant.
CurvatureTensor curvature_tensor(const InvariantMetricSpace& ms);

/// Sectional curvature of the plane spanned by x, y (m-coordinates; must be
/// orthonormal for the metric within kCurvatureTol).
double sectional_curvature(const InvariantMetricSpace& ms, const Vec& x, const Vec& y);

/// Sectional curvatures of `count` seeded random planes.
std::vector<double> random_sectional_curvatures(const InvariantMetricSpace& ms, int count, std::uint64_t seed);

/// The round sphere SO(n+1)/SO(n) with unit curvature.
ReductiveSpace sphere_space(int n);

struct FlatnessReport {
  bool flat = false;
  /// Complement had to be shifted by a map m1 -> k to become an ideal.
  bool shifted = false;
  double ideal_residual = 0.0;
  double curvature_max = 0.0;
};

/// Decides whether some reductive complement is an abelian ideal (first m
/// itself, then m1' = {x + phi(x)} with phi: m1 -> k solved linearly) and
/// cross-checks with the curvature tensor.
FlatnessReport flatness_report(const ReductiveSpace& space, double tol = kJacobiTol);
bool verify_flatness(const ReductiveSpace& space, double tol = kJacobiTol);

}  // namespace isocoh
