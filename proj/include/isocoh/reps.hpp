#pragma once

// Concrete representations: the transitive sphere actions (cohomogeneity one)
// and the reducible cohomogeneity-two representations m1 + m2, plus the
// controls used by the splitting criterion.

#include "isocoh/clifford.hpp"
#include "isocoh/representation.hpp"

#include <string>
#include <vector>

namespace isocoh {

struct SphereTransitiveRow {
  std::string id;     ///< e.g. "SO(5)"
  std::string group;  ///< group acting
  std::string isotropy;
  Representation rep;
  int expected_isotropy_dim = 0;
};

/// Rows SO(3), SO(5), SU(2), SU(3), Sp(1), Sp(2), U(2), Sp(1)Sp(1),
/// Sp(1)U(1), G2, Spin(7), Spin(9).
std::vector<SphereTransitiveRow> sphere_transitive_rows();

/// A representation on m1 + m2 with m1 spanned by the first m1_dim
/// coordinates and m2 by the rest.
struct TwoBlockRep {
  std::string id;
  Representation rep;
  int m1_dim = 0;

  int m2_dim() const { return rep.space_dim() - m1_dim; }
  Subspace m1() const;
  Subspace m2() const;
  Representation on_m1() const { return rep.restricted(m1()); }
  Representation on_m2() const { return rep.restricted(m2()); }
};

/// The five reducible cohomogeneity-two representations at minimal size:
/// U(3) on C + C^3 (det), U(1)Sp(1) on C + H, Sp(1)Sp(1) on R^3 + H,
/// Spin(6) on R^6 + R^8, Spin(7) on R^7 + R^8.
std::vector<TwoBlockRep> cohomogeneity_two_rows();

/// u(n) on C + C^n where A acts on C by k tr(A) and on C^n by A.
TwoBlockRep unitary_det_rep(int n, int k);

/// u(1) + sp(q) on C + H^q: the u(1) generator rotates C with speed 2k and
/// acts on H^q by right multiplication with i; sp(q) acts on H^q from the
/// left and trivially on C.
TwoBlockRep u1_sp_weight_rep(int q, int k);

/// Isotropy representation of the Clifford construction on R^n + (module)^q,
/// with k = spin(n) (+ sp(q) acting from the left when n = 2, 3).
TwoBlockRep clifford_isotropy_rep(int n, int q);

/// so(3) + so(3) acting factorwise on R^3 + R^3.
TwoBlockRep product_control_rep();

/// g2 as the stabilizer of a unit spinor in spin(7) acting on R^8, with its
/// action on R^7 (first) and on the spinors (second).
std::pair<Representation, Representation> g2_representations();

}  // namespace isocoh
