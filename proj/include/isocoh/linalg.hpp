#pragma once

// Dense linear algebra helpers shared by every module: numerical rank,
// nullspaces, subspaces and a streaming solver for large stacked linear
// systems.

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace isocoh {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Singular values below kRankRelTol * max(sigma_max, 1) count as zero.
/// Structure constants in this library are O(1), so the floor of 1 keeps
/// round-off-sized matrices from being promoted to rank one.
inline constexpr double kRankRelTol = 1e-8;

/// Mutual projection residual under which two subspaces are equal.
inline constexpr double kSubspaceTol = 1e-8;

/// Default seed for every sampled check (0x5EED).
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

double rank_threshold(double sigma_max, double rel_tol = kRankRelTol);

int numerical_rank(const Mat& a, double rel_tol = kRankRelTol);

/// Orthonormal basis (columns) of {x : a x = 0}.
Mat nullspace(const Mat& a, double rel_tol = kRankRelTol);

/// Orthonormal basis (columns) of the column span of a.
Mat orthonormal_range(const Mat& a, double rel_tol = kRankRelTol);

/// Spectral norm (largest singular value).
double spectral_norm(const Mat& a);

/// Seeded unit vector with Gaussian direction.
Vec random_unit_vector(int dim, std::mt19937_64& rng);

/// Seeded Haar-ish orthogonal matrix (QR of a Gaussian matrix, sign fixed).
Mat random_orthogonal(int dim, std::mt19937_64& rng);

/// A linear subspace of R^n described by an orthonormal basis with respect to
/// an ambient inner product (identity unless given).
class Subspace {
 public:
  Subspace() = default;

  /// Orthonormalizes the span of `spanning` (columns). Dependent columns are
  /// dropped.
  static Subspace span(const Mat& spanning, const Mat& inner_product);
  static Subspace span(const Mat& spanning);
  static Subspace zero(int ambient_dim);
  static Subspace whole(int ambient_dim);
  /// Span of the coordinate vectors e_i for the given indices.
  static Subspace coordinate(int ambient_dim, const std::vector<int>& indices);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }
  const Mat& inner_product() const { return inner_; }

  /// Orthogonal projector (with respect to the ambient inner product).
  Mat projector() const;
  Vec project(const Vec& v) const;
  /// Coordinates of the orthogonal projection of v in this basis.
  Vec coordinates(const Vec& v) const;
  /// Norm of the component of v orthogonal to this subspace.
  double distance(const Vec& v) const;

  bool contains(const Subspace& other, double tol = kSubspaceTol) const;
  bool equals(const Subspace& other, double tol = kSubspaceTol) const;

  Subspace intersection(const Subspace& other) const;
  /// Orthogonal complement inside the ambient space.
  Subspace complement() const;

 private:
  Subspace(Mat basis, Mat inner) : basis_(std::move(basis)), inner_(std::move(inner)) {}

  Mat basis_;
  Mat inner_;
};

/// Solution set of a stacked affine system A x + b = 0 accumulated block by
/// block. The current solution set is particular() + span(basis()); the
/// particular solution is kept orthogonal to the basis (minimum norm).
class AffineSolver {
 public:
  explicit AffineSolver(int unknowns);

  /// Adds constraints a x + b = 0. Blocks are folded in one SVD at a time, so
  /// the full system is never materialized.
  void add(const Mat& a, const Vec& b);
  void add(const Mat& a) { add(a, Vec::Zero(a.rows())); }

  int unknowns() const { return static_cast<int>(particular_.size()); }
  int dimension() const { return static_cast<int>(basis_.cols()); }
  bool consistent() const { return consistent_; }
  /// Largest least-squares residual seen; > 0 only when inconsistent.
  double inconsistency() const { return inconsistency_; }
  const Vec& particular() const { return particular_; }
  const Mat& basis() const { return basis_; }

 private:
  Vec particular_;
  Mat basis_;
  bool consistent_ = true;
  double inconsistency_ = 0.0;
};

/// Buffers rows and flushes them into an AffineSolver in blocks large enough
/// that each SVD does real work.
class RowBatcher {
 public:
  RowBatcher(AffineSolver& solver, int min_rows = 128);
  ~RowBatcher();

  void push(const Vec& row, double rhs);
  void flush();

 private:
  AffineSolver& solver_;
  int min_rows_;
  std::vector<Vec> rows_;
  std::vector<double> rhs_;
};

}  // namespace isocoh
