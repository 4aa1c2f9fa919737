#pragma once

// Clifford algebras Cl_n (e_i e_j + e_j e_i = -2 delta_ij), integer gamma
// matrices for n = 2..9 and the spin(n) embedding.

#include "isocoh/representation.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace isocoh {

/// A single basis blade with a coefficient. Generator indices are 1-based.
struct Blade {
  std::vector<int> indices;  ///< strictly increasing
  double coefficient = 1.0;
};

/// Element of Cl_n stored as blade bitmask -> coefficient. `square` is the
/// value of e_i^2: -1 for the algebra used throughout, +1 for the positive
/// signature algebra carried by the spin(9) module.
class CliffordElement {
 public:
  explicit CliffordElement(int n, int square = -1);

  static CliffordElement scalar(int n, double value, int square = -1);
  /// e_i, 1 <= i <= n.
  static CliffordElement generator(int n, int i, int square = -1);
  static CliffordElement blade(int n, const Blade& b, int square = -1);

  int n() const { return n_; }
  int square() const { return square_; }
  const std::map<std::uint32_t, double>& terms() const { return terms_; }
  std::vector<Blade> blades() const;
  double coefficient(const std::vector<int>& indices) const;

  CliffordElement operator*(const CliffordElement& other) const;
  CliffordElement operator+(const CliffordElement& other) const;
  CliffordElement operator-(const CliffordElement& other) const;
  CliffordElement operator*(double s) const;
  bool operator==(const CliffordElement& other) const = default;

 private:
  void add_term(std::uint32_t mask, double value);

  int n_;
  int square_;
  std::map<std::uint32_t, double> terms_;
};

CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b);

/// Sign of e_A e_B = sign * e_{A xor B} for blade bitmasks.
int blade_product_sign(std::uint32_t a, std::uint32_t b, int square);

struct CliffordModule {
  int n = 0;
  int dim = 0;
  /// Gammas satisfy G_i G_j + G_j G_i = 2 * square * delta_ij.
  int square = -1;
  std::vector<Mat> gammas;
};

/// Irreducible real module for n = 2..9; dimensions 4,4,8,8,8,8,16,16.
/// n = 2,3 use right quaternion multiplication on H, n = 4..7 left octonion
/// multiplication on O, n = 8 the doubled octonion module on O + O. For n = 9
/// the module is the positive signature one (square +1) obtained from the
/// n = 8 volume element, which is how spin(9) acts on R^16.
CliffordModule spin_module(int n);

/// `copies` orthogonal copies of a module (block diagonal gammas).
CliffordModule repeat(const CliffordModule& module, int copies);

/// max |G_i G_j + G_j G_i - 2 square delta_ij I| (exactly 0 for integer gammas).
double anticommutation_residual(const CliffordModule& module);

/// sum z_i G_i.
Mat vector_action(const CliffordModule& module, const Vec& z);

/// Matrix of a Clifford element acting on the module.
Mat blade_action(const CliffordModule& module, const CliffordElement& element);

/// Index pairs (i, j), i < j, 0-based, in the order used for spin bases.
std::vector<std::pair<int, int>> spin_pairs(int n);

/// spin(n) with basis 1/2 G_i G_j (i < j) and its action on the module.
Representation spin_algebra(const CliffordModule& module);

/// Vector representation of spin(n) on R^n in spin_algebra's basis: the
/// basis element 1/2 e_i e_j acts by v -> [1/2 e_i e_j, v] (Clifford
/// commutator), i.e. e_i -> -square e_j, e_j -> square e_i.
Representation spin_vector_representation(const CliffordModule& module);

}  // namespace isocoh
