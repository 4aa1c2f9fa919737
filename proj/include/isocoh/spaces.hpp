#pragma once

// Reductive homogeneous spaces g = k + m1 + m2 built from explicit structure
// constants: the Clifford family, generalized Heisenberg algebras, the
// trivial-submodule branch and the semidirect hyperbolic models, together
// with the structural checks on g1 = k + m1.

#include "isocoh/completion.hpp"
#include "isocoh/reps.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isocoh {

/// Raised when a construction does not satisfy the Jacobi identity (or
/// another structural invariant). Carries the worst basis triple.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::array<int, 3> witness, double residual)
      : std::invalid_argument(what), witness_(witness), residual_(residual) {}
  std::array<int, 3> witness() const { return witness_; }
  double residual() const { return residual_; }

 private:
  std::array<int, 3> witness_;
  double residual_;
};

/// g = k + m1 + m2 with every piece spanned by basis vectors of g. The
/// inner product of g restricted to m is the invariant metric.
struct ReductiveSpace {
  std::string id;
  LieAlgebra algebra;
  std::vector<int> k_indices;
  std::vector<std::vector<int>> blocks;  ///< m1, m2 (m1 may be empty)
  /// Elements of K acting trivially on m1 that are not visible at the Lie
  /// algebra level (e.g. -1 in Spin(n)), as automorphisms of g.
  std::vector<Mat> extra_kernel_elements;
  std::vector<std::string> flags;

  int dim() const { return algebra.dim(); }
  int k_dim() const { return static_cast<int>(k_indices.size()); }
  int m_dim() const;
  int block_dim(int b) const { return static_cast<int>(blocks.at(b).size()); }
  std::vector<int> m_indices() const;
  Subspace isotropy() const;
  Subspace block(int b) const;
  Subspace m() const;
  bool has_flag(const std::string& f) const;
};

struct SpaceResiduals {
  double jacobi = 0.0;
  double k_closure = 0.0;
  double block_invariance = 0.0;
  double orthogonality = 0.0;
};

SpaceResiduals space_residuals(const ReductiveSpace& space);
/// Throws ValidationError unless all residuals are below tol.
void validate_space(const ReductiveSpace& space, double tol = kJacobiTol);

/// Isotropy representation of k on m = m1 + m2 (m1 coordinates first).
TwoBlockRep isotropy_representation(const ReductiveSpace& space);

// ---------------------------------------------------------------------------
// Clifford family

enum class M2Mode { Zero, Heisenberg, Completed };

struct CliffordSpaceSpec {
  int n = 7;             ///< 2, 3, 6 or 7
  double lambda = 0.0;   ///< [e_i, e_j] = lambda e_i e_j
  double mu = 0.0;       ///< [e_i, w] = mu e_i . w
  int copies = 1;        ///< module count q (n = 2, 3 only)
  M2Mode mode = M2Mode::Zero;
  double kappa = 1.0;    ///< Heisenberg mode: [w, w'] = kappa sum <e_i w, w'> e_i
  /// Completed mode: "negative-definite", "signature(p,q)" or "abelian".
  std::string selector = "negative-definite";
};

/// Index layout of the Clifford algebra: k0 (bivectors e_i e_j, i < j),
/// k1 (sp(q), n = 2, 3 only), m1 (e_i), m2 (module).
struct CliffordLayout {
  int n = 0;
  int module_dim = 0;
  std::vector<int> k0, k1, m1, m2;
};

CliffordLayout clifford_layout(int n, int copies);

/// Structure constants of the Clifford construction without any validation
/// (mode Zero or Heisenberg).
LieAlgebra clifford_algebra_raw(const CliffordSpaceSpec& spec);

/// The completion problem for the (m2, m2) block with target k + m1.
CompletionProblem clifford_completion_problem(const CliffordSpaceSpec& spec);

/// Picks a point of the completion space according to the selector; throws
/// if no grid point matches.
Vec select_completion(const CompletionSolution& sol, const std::string& selector);

/// Validated Clifford space. Throws ValidationError on Jacobi failure.
ReductiveSpace build_clifford_space(const CliffordSpaceSpec& spec);

// ---------------------------------------------------------------------------
// Heisenberg

struct HeisenbergSpec {
  int center_dim = 1;  ///< 1, 2, 3, 6 or 7
  int copies = 1;      ///< module count (k for center 1, n for 2 and 3)
  double kappa = 1.0;
};

/// Nilpotent algebra m1 + m2 with isotropy. Throws std::invalid_argument for
/// kappa = 0 (the flat case).
ReductiveSpace build_heisenberg(const HeisenbergSpec& spec);

/// Pull back by f(Z) = eps Z, f(X) = X / rho with rho = sqrt|kappa|, eps =
/// sign(kappa), giving the kappa = 1 algebra.
ReductiveSpace normalize_heisenberg(const ReductiveSpace& space, double kappa);

/// J_Z for each center basis vector: <J_Z X, Y> = <Z, [X, Y]>.
std::vector<Mat> heisenberg_j_maps(const ReductiveSpace& space);
/// max |J_a J_b + J_b J_a + 2 delta_ab I|.
double j_anticommutation_residual(const std::vector<Mat>& j);

// ---------------------------------------------------------------------------
// Trivial-submodule branch

enum class TrivialBranch { SuCompact, SuNoncompact, Heis, EuclideanScrew };

ReductiveSpace build_trivial_module_space(TrivialBranch branch, int n);

// ---------------------------------------------------------------------------
// Semidirect hyperbolic models R x K^l

struct SemidirectHyperbolicSpec {
  int field_dim = 1;  ///< 1, 2, 4
  int copies = 1;     ///< l
  double rate = 1.0;  ///< lambda, real part of the derivation
  double rotation = 0.0;  ///< angle speed of the skew part (C, H only)
};

ReductiveSpace build_semidirect_hyperbolic(const SemidirectHyperbolicSpec& spec);

/// Derivation D = rate Id + rotation Omega on K^l.
Mat hyperbolic_derivation(const SemidirectHyperbolicSpec& spec);

/// Group law (t, x)(s, y) = (t + s, x + exp(t D) y).
std::pair<double, Vec> hyperbolic_group_multiply(const SemidirectHyperbolicSpec& spec, double t, const Vec& x,
                                                 double s, const Vec& y);

// ---------------------------------------------------------------------------
// Structure of g1 = k + m1

/// Raised when the kernel of the action on m1 has fixed vectors in m2.
class G1HypothesisError : public std::invalid_argument {
 public:
  G1HypothesisError(const std::string& what, Vec witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

struct G1Result {
  LieAlgebra algebra;
  double closure_residual = 0.0;  ///< || proj_m2 [m1, m1] ||
  int kernel_dim = 0;             ///< dim of the Lie algebra kernel N1
};

/// Checks the kernel hypothesis (Lie algebra kernel plus the declared extra
/// kernel elements) and returns the subalgebra g1.
G1Result build_g1(const ReductiveSpace& space, double tol = kJacobiTol);

/// max |proj_m2 [m1, m1]| without checking the hypothesis.
double g1_closure_residual(const ReductiveSpace& space);

struct ProjectedActionReport {
  bool isometric = false;
  double max_symmetric_norm = 0.0;
};

/// For every basis vector xi of k + m1, the symmetric part of
/// w -> proj_m2 [xi, w] on m2.
ProjectedActionReport projected_action_isometry_test(const ReductiveSpace& space, double tol = kJacobiTol);

struct EigenBlock {
  double real_part = 0.0;
  int dim = 0;
  double max_imag = 0.0;
};

struct EigenspaceReport {
  std::vector<EigenBlock> blocks;  ///< sorted by real part
  double diagonalization_residual = 0.0;
  bool zero_space_is_g1 = false;
  double nonzero_abelian_residual = 0.0;  ///< max |[E(l), E(l)]| over l != 0
};

/// Real eigenspace decomposition of ad(xi) on g, grouping eigenvalues by
/// real part.
EigenspaceReport ad_eigenspace_decomposition(const ReductiveSpace& space, const Vec& xi);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string id;
  std::string family;  ///< heisenberg | compact | noncompact | hyperbolic
  std::string fibre;
  std::string base;
};

/// Stable ordered list of catalog ids with metadata.
const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_ids();
std::optional<CatalogEntry> find_catalog_entry(const std::string& id);
/// Builds and validates one entry. Throws std::out_of_range for unknown ids.
ReductiveSpace build_catalog_space(const std::string& id);
std::vector<ReductiveSpace> catalog();

/// Rank-two symmetric controls, kept outside the catalog.
std::vector<ReductiveSpace> symmetric_controls();

}  // namespace isocoh
