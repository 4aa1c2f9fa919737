#include "isocoh/classical.hpp"
#include "isocoh/reps.hpp"

#include <doctest.h>

using namespace isocoh;

TEST_CASE("classical defining representations are skew homomorphisms") {
  for (int n = 2; n <= 4; ++n) {
    CHECK_NOTHROW(validate(so_standard(n)));
    CHECK_NOTHROW(validate(su_standard(n)));
    CHECK_NOTHROW(validate(u_standard(n)));
  }
  CHECK_NOTHROW(validate(sp_standard(1)));
  CHECK_NOTHROW(validate(sp_standard(2)));
  CHECK(so_standard(5).algebra_dim() == 10);
  CHECK(su_standard(3).algebra_dim() == 8);
  CHECK(u_standard(3).algebra_dim() == 9);
  CHECK(sp_standard(2).algebra_dim() == 10);
  CHECK(sp_standard(2).space_dim() == 8);
}

TEST_CASE("compact classical algebras have negative definite Killing form") {
  CHECK(fingerprint(so_standard(5).algebra()).killing == Signature{0, 10, 0});
  CHECK(fingerprint(su_standard(4).algebra()).killing == Signature{0, 15, 0});
  CHECK(fingerprint(sp_standard(2).algebra()).killing == Signature{0, 10, 0});
  CHECK(fingerprint(u_standard(2).algebra()).killing == Signature{0, 3, 1});
}

TEST_CASE("sp(q) commutes with right quaternion multiplication") {
  const Representation sp = sp_standard(2);
  for (int u = 1; u <= 3; ++u) {
    const Mat r = right_multiplication(2, u);
    for (const Mat& m : sp.matrices()) CHECK((m * r - r * m).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("rotation group orbits are spheres") {
  for (int n = 2; n <= 5; ++n) {
    const Representation so = so_standard(n);
    CHECK(cohomogeneity(so) == 1);
    Vec v = Vec::Zero(n);
    v(0) = 1.0;
    CHECK(orbit_dimension(so, v) == n - 1);
    CHECK(isotropy_subalgebra(so, v).dim() == (n - 1) * (n - 2) / 2);
  }
}

TEST_CASE("diagonal SO(3) on two copies has cohomogeneity 3") {
  const Representation so = so_standard(3);
  const Representation two = direct_sum(so, so);
  CHECK(two.space_dim() == 6);
  // Generic pairs of vectors have trivial isotropy: 6 - 3.
  CHECK(cohomogeneity(two) == 3);
}

TEST_CASE("Schur commutant dimension distinguishes real, complex and quaternionic types") {
  CHECK(hom_space_dimension(so_standard(3), so_standard(3)) == 1);
  CHECK(hom_space_dimension(u_standard(2), u_standard(2)) == 2);
  CHECK(hom_space_dimension(su_standard(2), su_standard(2)) == 4);
  const Representation su2 = su_standard(2);
  const auto maps = equivariant_maps(su2, su2);
  CHECK(maps.size() == 4);
  for (const Mat& a : maps) {
    for (const Mat& m : su2.matrices()) CHECK((a * m - m * a).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("kernel ideal and fixed subspace") {
  const LieAlgebra so3 = so_standard(3).algebra();
  const Representation triv = Representation::trivial(so3, 2);
  CHECK(kernel_ideal(triv).dim() == 3);
  CHECK(fixed_subspace(triv, Subspace::whole(3)).dim() == 2);
  CHECK(kernel_ideal(so_standard(3)).dim() == 0);
  const Representation sum = direct_sum(so_standard(3), triv);
  CHECK(fixed_subspace(sum, Subspace::whole(3)).equals(Subspace::coordinate(5, {3, 4})));
}

TEST_CASE("tensor products and restrictions") {
  const Representation a = so_standard(3);
  const Representation t = tensor_product(a, a);
  CHECK(t.space_dim() == 9);
  CHECK(t.homomorphism_residual() < 1e-12);
  // so(3) on R^3 x R^3 = R + R^3 + R^5: one fixed line.
  CHECK(fixed_subspace(t, Subspace::whole(3)).dim() == 1);
  const Representation sum = direct_sum(a, a);
  const Representation r = sum.restricted(Subspace::coordinate(6, {3, 4, 5}));
  CHECK(r.space_dim() == 3);
  CHECK(hom_space_dimension(r, a) == 1);
  CHECK_THROWS(sum.restricted(Subspace::coordinate(6, {0, 3})));
}

TEST_CASE("conjugation preserves the homomorphism property") {
  std::mt19937_64 rng(13);
  const Representation a = su_standard(2);
  const Mat q = random_orthogonal(4, rng) * 2.0;
  const Representation b = a.conjugated(q);
  CHECK(b.homomorphism_residual() < 1e-12);
  CHECK(b.skew_residual() < 1e-10);
  CHECK(hom_space_dimension(a, b) == 4);
}

TEST_CASE("semidirect sum is a Lie algebra with an abelian ideal") {
  const LieAlgebra g = semidirect_sum(so_standard(3));
  CHECK(g.dim() == 6);
  CHECK(jacobi_residual(g) < 1e-14);
  CHECK(closure_residual(g, Subspace::coordinate(6, {3, 4, 5})) == 0.0);
  // e(3) has no center and is not semisimple.
  CHECK(center(g).dim() == 0);
  CHECK(fingerprint(g).killing == Signature{0, 3, 3});
}

TEST_CASE("matrix Lie algebra recovers so(3) from its generators") {
  const std::vector<Mat> gens{rotation_generator(3, 0, 1), rotation_generator(3, 0, 2), rotation_generator(3, 1, 2)};
  const Representation r = matrix_lie_algebra(gens);
  CHECK(r.homomorphism_residual() < 1e-12);
  CHECK(fingerprint(r.algebra()).killing == Signature{0, 3, 0});
  Mat a = Mat::Zero(3, 3);
  a(0, 0) = 1.0;
  CHECK_THROWS(matrix_lie_algebra({rotation_generator(3, 0, 1), a}));
}

TEST_CASE("adjoint representation is the ad map") {
  const LieAlgebra g = su_standard(3).algebra();
  const Representation ad = adjoint_representation(g);
  CHECK(ad.homomorphism_residual() < 1e-12);
  CHECK(kernel_ideal(ad).dim() == 0);
  // Adjoint orbits of SU(3) through regular elements have dimension 6.
  CHECK(cohomogeneity(ad) == 2);
}

TEST_CASE("splitting criterion on a product and on an irreducible mixture") {
  const TwoBlockRep prod = product_control_rep();
  const SplittingResult s = splitting_criterion(prod.rep, prod.m1(), prod.m2());
  CHECK(s.splits);
  CHECK(s.kernel1.dim() == 3);
  CHECK(s.kernel2.dim() == 3);
  const TwoBlockRep spin7 = clifford_isotropy_rep(7, 1);
  CHECK_FALSE(splitting_criterion(spin7.rep, spin7.m1(), spin7.m2()).splits);
  CHECK_THROWS(splitting_criterion(prod.rep, Subspace::coordinate(6, {0, 3}), Subspace::coordinate(6, {1, 2, 4, 5})));
}

TEST_CASE("orbit samples are reproducible") {
  const Representation r = u_standard(3);
  CHECK(orbit_dimension_samples(r, 5, 42) == orbit_dimension_samples(r, 5, 42));
}
