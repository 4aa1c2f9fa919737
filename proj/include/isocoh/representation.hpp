#pragma once

// Real representations of structure-constant Lie algebras and the numerical
// representation theory built on them: orbits, isotropy, kernels, fixed
// vectors and spaces of equivariant maps.

#include "isocoh/lie_algebra.hpp"

#include <cstdint>
#include <vector>

namespace isocoh {

/// Default tolerance for representation invariants.
inline constexpr double kRepTol = 1e-9;
/// Number of seeded samples for genericity checks.
inline constexpr int kDefaultSamples = 20;

class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::vector<Mat> matrices);
  Representation(LieAlgebra algebra, std::vector<Mat> matrices, Mat inner_product);

  /// The trivial representation on R^space_dim.
  static Representation trivial(const LieAlgebra& algebra, int space_dim);

  const LieAlgebra& algebra() const { return algebra_; }
  int algebra_dim() const { return algebra_.dim(); }
  int space_dim() const { return space_dim_; }
  const std::vector<Mat>& matrices() const { return matrices_; }
  const Mat& matrix(int i) const { return matrices_.at(i); }
  const Mat& inner_product() const { return inner_; }

  /// rho(xi) for xi in algebra coordinates.
  Mat act(const Vec& xi) const;

  /// max || rho([b_i,b_j]) - [rho(b_i), rho(b_j)] || (max-abs entry).
  double homomorphism_residual() const;
  /// max || rho(b_i)^T G + G rho(b_i) ||.
  double skew_residual() const;

  /// Change of basis v = Q v'; new matrices Q^{-1} rho Q, inner product
  /// Q^T G Q.
  Representation conjugated(const Mat& q) const;

  /// Restriction to an invariant subspace (coordinates in its orthonormal
  /// basis). Throws if the subspace is not invariant within tol.
  Representation restricted(const Subspace& sub, double tol = kRepTol) const;

  /// The same action viewed through a Lie algebra map: matrices rho(F e_i).
  Representation pulled_back(const LieAlgebra& source, const Mat& f) const;

 private:
  LieAlgebra algebra_;
  int space_dim_ = 0;
  std::vector<Mat> matrices_;
  Mat inner_;
};

/// Checks homomorphism and skew residuals; throws std::invalid_argument.
void validate(const Representation& rep, double tol = kRepTol);

/// Block diagonal sum on V_a + V_b.
Representation direct_sum(const Representation& a, const Representation& b);

/// Kronecker sum rho_a x I + I x rho_b on V_a (x) V_b; index a*dim_b + b.
Representation tensor_product(const Representation& a, const Representation& b);

/// Semidirect sum acting + V with V an abelian ideal:
/// [(x,u),(y,v)] = ([x,y], rho(x) v - rho(y) u).
LieAlgebra semidirect_sum(const Representation& rep, double tol = kRepTol);

/// The Lie algebra spanned by the given (linearly independent, commutator
/// closed) matrices, together with its defining representation. Structure
/// constants come from projecting commutators onto the span; throws if the
/// span is not closed.
Representation matrix_lie_algebra(const std::vector<Mat>& mats, double tol = kRepTol);

/// The adjoint representation of an algebra on itself.
Representation adjoint_representation(const LieAlgebra& alg);

int orbit_dimension(const Representation& rep, const Vec& v);
/// Orbit dimension at seeded random unit vectors.
std::vector<int> orbit_dimension_samples(const Representation& rep, int samples, std::uint64_t seed);
int cohomogeneity(const Representation& rep, int samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed);

/// {xi : rho(xi) v = 0} as a subspace of the algebra.
Subspace isotropy_subalgebra(const Representation& rep, const Vec& v);

/// Common nullspace of rho(xi) for xi in sub.
Subspace fixed_subspace(const Representation& rep, const Subspace& sub);

/// {xi : rho(xi) = 0}.
Subspace kernel_ideal(const Representation& rep);

/// dim {A : A rho_a(xi) = rho_b(xi) A for all xi}.
int hom_space_dimension(const Representation& a, const Representation& b);

/// Basis of the equivariant maps V_a -> V_b, each as a dim_b x dim_a matrix.
std::vector<Mat> equivariant_maps(const Representation& a, const Representation& b);

struct SplittingResult {
  bool splits = false;
  Subspace kernel1;  ///< kernel of the action on m1 (in the algebra)
  Subspace kernel2;  ///< kernel of the action on m2
  Subspace fix1;     ///< fixed vectors of kernel1 in the whole space
  Subspace fix2;
};

/// De Rham splitting test for a representation on m1 + m2 given as two
/// orthogonal invariant subspaces: true iff both kernels are nontrivial,
/// Fix(N1) = m1 and Fix(N2) = m2. Throws if the blocks are not invariant or
/// do not decompose the space.
SplittingResult splitting_criterion(const Representation& rep, const Subspace& m1, const Subspace& m2,
                                    double tol = kRepTol);

}  // namespace isocoh
