#pragma once

// Finite-dimensional real Lie algebras given by structure constants
// [b_i, b_j] = sum_k c(i,j,k) b_k with respect to a fixed basis.

#include "isocoh/linalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace isocoh {

/// Default tolerance for "this is a Lie algebra" (relative Jacobi residual).
inline constexpr double kJacobiTol = 1e-9;

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra of the given dimension with orthonormal basis.
  explicit LieAlgebra(int dim);

  int dim() const { return dim_; }

  double c(int i, int j, int k) const { return c_[index(i, j, k)]; }
  /// Sets [b_i, b_j] = v and [b_j, b_i] = -v.
  void set_bracket(int i, int j, const Vec& v);
  /// Sets the single constant c(i,j,k) and its antisymmetric partner.
  void set_constant(int i, int j, int k, double value);
  void add_constant(int i, int j, int k, double value);

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(b_i): column j is [b_i, b_j].
  Mat ad_basis(int i) const;
  Mat ad(const Vec& x) const;

  const Mat& inner_product() const { return inner_; }
  void set_inner_product(const Mat& g);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int i) const;

  double max_abs_constant() const;
  /// Largest |c(i,j,k) + c(j,i,k)|; zero for anything built through this API.
  double antisymmetry_residual() const;

  /// Flat storage, index (i*dim + j)*dim + k.
  const std::vector<double>& constants() const { return c_; }

  bool operator==(const LieAlgebra& other) const = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  void check_index(int i) const;

  int dim_ = 0;
  std::vector<double> c_;
  Mat inner_;
  std::vector<std::string> labels_;
};

/// Jacobiator J(b_i,b_j,b_k) = [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j].
Vec jacobiator(const LieAlgebra& alg, int i, int j, int k);

struct JacobiReport {
  double residual = 0.0;  ///< max ||J|| / max |c| (0 for abelian)
  double absolute = 0.0;  ///< max ||J||
  std::array<int, 3> witness{-1, -1, -1};
};

JacobiReport jacobi_report(const LieAlgebra& alg);
double jacobi_residual(const LieAlgebra& alg);

Mat killing_form(const LieAlgebra& alg);
/// max |B([z,x],y) + B(x,[z,y])| over basis z, x, y divided by max(1, ||B||).
double killing_invariance_residual(const LieAlgebra& alg, const Mat& killing);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Eigenvalue counts of a symmetric matrix; |eig| <= tol * max(1, max|eig|)
/// counts as zero.
Signature signature(const Mat& sym, double tol = kRankRelTol);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

Subspace center(const LieAlgebra& alg);
/// [g, g].
Subspace derived_algebra(const LieAlgebra& alg);
/// Dimensions of g = g^1, g^2 = [g,g], g^3 = [g,g^2], ... until it
/// stabilizes.
std::vector<int> lower_central_series(const LieAlgebra& alg);
/// Smallest c with g^{c+1} = 0, 0 for the zero algebra, -1 if not nilpotent.
int nilpotency_class(const LieAlgebra& alg);

/// Coarse isomorphism invariants.
struct Fingerprint {
  int dim = 0;
  Signature killing;
  int center_dim = 0;
  int nilpotency_class = 0;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const LieAlgebra& alg);
std::string to_string(const Signature& s);
std::string to_string(const Fingerprint& f);

/// max over basis pairs of the distance of [u, v] from the subspace.
double closure_residual(const LieAlgebra& alg, const Subspace& sub);
/// max over basis pairs of the distance of [a, m] from m, a in `acting`.
double invariance_residual(const LieAlgebra& alg, const Subspace& acting, const Subspace& m);

/// The subalgebra carried by `sub` in its orthonormal basis. Throws if the
/// subspace is not closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& alg, const Subspace& sub, double tol = kSubspaceTol);

/// Bracket [x, y]' = F^{-1} [F x, F y] for invertible F (columns are the new
/// basis vectors expressed in the old basis).
LieAlgebra pullback(const LieAlgebra& alg, const Mat& f);

/// Dual real form for a decomposition g = h + p with the given basis indices
/// spanning p: brackets inside p change sign. Requires [h, p] in p and
/// [p, p] in h.
LieAlgebra dual_real_form(const LieAlgebra& alg, const std::vector<int>& block);

}  // namespace isocoh
