#include "isocoh/lie_algebra.hpp"

#include <doctest.h>

using namespace isocoh;

namespace {

// so(3) with [e1, e2] = e3 and cyclic.
LieAlgebra so3() {
  LieAlgebra g(3);
  g.set_constant(0, 1, 2, 1.0);
  g.set_constant(1, 2, 0, 1.0);
  g.set_constant(2, 0, 1, 1.0);
  return g;
}

// sl(2, R) with basis h, e, f.
LieAlgebra sl2() {
  LieAlgebra g(3);
  g.set_constant(0, 1, 1, 2.0);
  g.set_constant(0, 2, 2, -2.0);
  g.set_constant(1, 2, 0, 1.0);
  return g;
}

// Heisenberg algebra of dimension 2m + 1, [x_i, y_i] = z.
LieAlgebra heisenberg(int m) {
  LieAlgebra g(2 * m + 1);
  for (int i = 0; i < m; ++i) g.set_constant(i, m + i, 2 * m, 1.0);
  return g;
}

}  // namespace

TEST_CASE("so(3) Killing form is -2 times the identity") {
  const LieAlgebra g = so3();
  CHECK(jacobi_residual(g) == 0.0);
  const Mat b = killing_form(g);
  CHECK((b + 2.0 * Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(signature(b) == Signature{0, 3, 0});
  CHECK(killing_invariance_residual(g, b) < 1e-14);
}

TEST_CASE("sl(2,R) Killing form agrees with 4 tr(xy) on 2x2 matrices") {
  const LieAlgebra g = sl2();
  std::vector<Eigen::Matrix2d> m(3);
  m[0] << 1, 0, 0, -1;
  m[1] << 0, 1, 0, 0;
  m[2] << 0, 0, 1, 0;
  const Mat b = killing_form(g);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(b(i, j) == doctest::Approx(4.0 * (m[i] * m[j]).trace()));
  }
  CHECK(signature(b) == Signature{2, 1, 0});
}

TEST_CASE("broken Jacobi identity reports a witness triple") {
  LieAlgebra g = so3();
  g.set_constant(0, 1, 0, 0.5);
  const JacobiReport r = jacobi_report(g);
  CHECK(r.residual > 1e-3);
  for (int w : r.witness) CHECK((w >= 0 && w < 3));
  CHECK(jacobiator(g, r.witness[0], r.witness[1], r.witness[2]).norm() == doctest::Approx(r.absolute));
}

TEST_CASE("antisymmetry is maintained by the setters") {
  LieAlgebra g(4);
  g.set_bracket(0, 3, Vec::Ones(4));
  g.add_constant(3, 0, 1, 2.0);
  CHECK(g.antisymmetry_residual() == 0.0);
  CHECK(g.c(3, 0, 1) == doctest::Approx(1.0));
  CHECK(g.c(0, 3, 1) == doctest::Approx(-1.0));
}

TEST_CASE("ad is the matrix of the bracket") {
  const LieAlgebra g = sl2();
  std::mt19937_64 rng(11);
  const Vec x = random_unit_vector(3, rng);
  const Vec y = random_unit_vector(3, rng);
  CHECK((g.ad(x) * y - g.bracket(x, y)).norm() < 1e-14);
  CHECK((g.ad_basis(1).col(2) - g.bracket_basis(1, 2)).norm() == 0.0);
}

TEST_CASE("Heisenberg algebras are two-step nilpotent with one-dimensional center") {
  for (int m = 1; m <= 3; ++m) {
    const LieAlgebra g = heisenberg(m);
    CHECK(nilpotency_class(g) == 2);
    CHECK(center(g).dim() == 1);
    CHECK(derived_algebra(g).dim() == 1);
    CHECK(lower_central_series(g) == std::vector<int>{2 * m + 1, 1, 0});
  }
  CHECK(nilpotency_class(LieAlgebra(3)) == 1);
  CHECK(nilpotency_class(so3()) == -1);
}

TEST_CASE("direct sum center and fingerprint") {
  const LieAlgebra g = direct_sum(so3(), LieAlgebra(2));
  CHECK(g.dim() == 5);
  CHECK(center(g).dim() == 2);
  const Fingerprint f = fingerprint(g);
  CHECK(f.killing == Signature{0, 3, 2});
  CHECK(to_string(f) == "dim=5 killing=(0,3,2) center=2 nilpotency=-1");
}

TEST_CASE("pullback by an invertible map preserves the isomorphism type") {
  std::mt19937_64 rng(12);
  const Mat f = random_orthogonal(3, rng) * Eigen::Vector3d(1.0, 2.0, 0.5).asDiagonal();
  const LieAlgebra g = sl2();
  const LieAlgebra h = pullback(g, f);
  CHECK(jacobi_residual(h) < 1e-12);
  CHECK(fingerprint(h) == fingerprint(g));
  const LieAlgebra back = pullback(h, f.inverse());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK((back.bracket_basis(i, j) - g.bracket_basis(i, j)).norm() < 1e-12);
  }
}

TEST_CASE("dual real form of so(3) is sl(2,R)") {
  const LieAlgebra d = dual_real_form(so3(), {0, 1});
  CHECK(jacobi_residual(d) == 0.0);
  CHECK(signature(killing_form(d)) == Signature{2, 1, 0});
}

TEST_CASE("subalgebras and residuals") {
  const LieAlgebra g = direct_sum(so3(), so3());
  const Subspace first = Subspace::coordinate(6, {0, 1, 2});
  CHECK(closure_residual(g, first) == 0.0);
  CHECK(invariance_residual(g, first, Subspace::coordinate(6, {3, 4, 5})) == 0.0);
  CHECK(fingerprint(subalgebra(g, first)) == fingerprint(so3()));
  CHECK_THROWS_AS(subalgebra(g, Subspace::coordinate(6, {0, 1})), std::invalid_argument);
}

TEST_CASE("inner products must be symmetric positive definite") {
  LieAlgebra g(2);
  Mat bad(2, 2);
  bad << 1, 0.5, 0, 1;
  CHECK_THROWS(g.set_inner_product(bad));
  Mat neg = -Mat::Identity(2, 2);
  CHECK_THROWS(g.set_inner_product(neg));
  LieAlgebra empty(0);
  CHECK_NOTHROW(empty.set_inner_product(Mat(0, 0)));
}
