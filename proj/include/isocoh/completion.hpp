#pragma once

// Linear bracket completion: given a Lie algebra skeleton whose brackets
// inside an index block S are unknown but must land in a target subspace T
// (with T having no component along S), the Jacobi identity is affine in the
// unknowns and its solution set is computed exactly by streaming SVD.

#include "isocoh/lie_algebra.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace isocoh {

struct CompletionProblem {
  LieAlgebra skeleton;       ///< brackets inside `unknown` are ignored
  std::vector<int> unknown;  ///< index block S
  Subspace target;           ///< where the unknown brackets must land
};

/// Affine space of completions. Unknown coordinates are ordered as
/// (pair p, target basis vector t) -> p * target_dim + t.
class CompletionSolution {
 public:
  bool empty() const { return !consistent_; }
  /// Least-squares residual when empty.
  double inconsistency() const { return inconsistency_; }
  int dimension() const { return static_cast<int>(homogeneous_.cols()); }
  int unknowns() const { return static_cast<int>(particular_.size()); }
  const Vec& particular() const { return particular_; }
  const Mat& homogeneous() const { return homogeneous_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const Mat& target_basis() const { return target_; }

  /// The algebra obtained by substituting unknown coordinates y.
  LieAlgebra assemble(const Vec& y) const;
  /// particular + homogeneous * t.
  LieAlgebra assemble_at(const Vec& t) const;
  Vec point(const Vec& t) const;

 private:
  friend CompletionSolution complete_bracket(const CompletionProblem&, double);

  LieAlgebra base_;
  std::vector<std::pair<int, int>> pairs_;
  Mat target_;
  Vec particular_;
  Mat homogeneous_;
  bool consistent_ = true;
  double inconsistency_ = 0.0;
};

/// Solves for all completions. Throws std::invalid_argument when the problem
/// is not linear (target has support on S) or malformed.
CompletionSolution complete_bracket(const CompletionProblem& problem, double tol = kJacobiTol);

/// Completeness probe: Jacobi residuals of `count` seeded perturbations of a
/// solution point, each of size `magnitude` and orthogonal to the solution
/// space. Returns the smallest residual observed.
double min_perturbed_residual(const CompletionSolution& sol, const Vec& t, int count, double magnitude,
                              std::uint64_t seed);

}  // namespace isocoh
