#include "isocoh/geometry.hpp"

#include <doctest.h>

#include <cmath>

using namespace isocoh;

namespace {

// Three-dimensional Heisenberg group with orthonormal X, Y, Z and [X, Y] = Z.
ReductiveSpace heisenberg3() {
  ReductiveSpace s;
  s.id = "Nil3";
  s.algebra = LieAlgebra(3);
  s.algebra.set_constant(0, 1, 2, 1.0);
  s.blocks = {{0, 1}, {2}};
  return s;
}

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("unit spheres have sectional curvature one") {
  for (int n = 2; n <= 5; ++n) {
    const InvariantMetricSpace ms(sphere_space(n));
    for (double k : random_sectional_curvatures(ms, 20, 3)) CHECK(k == doctest::Approx(1.0).epsilon(1e-10));
    const CurvatureTensor r = curvature_tensor(ms);
    CHECK(r.symmetry_residual() < 1e-12);
  }
}

TEST_CASE("scaling the metric by s divides the curvature by s") {
  const InvariantMetricSpace ms(sphere_space(3), {4.0});
  for (double k : random_sectional_curvatures(ms, 10, 5)) CHECK(k == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("left-invariant Heisenberg metric matches the explicit formulas") {
  // For [X, Y] = Z orthonormal: K(X, Y) = -3/4, K(X, Z) = K(Y, Z) = 1/4.
  const InvariantMetricSpace ms(heisenberg3());
  CHECK(sectional_curvature(ms, unit(3, 0), unit(3, 1)) == doctest::Approx(-0.75));
  CHECK(sectional_curvature(ms, unit(3, 0), unit(3, 2)) == doctest::Approx(0.25));
  CHECK(sectional_curvature(ms, unit(3, 1), unit(3, 2)) == doctest::Approx(0.25));
  CHECK(curvature_tensor(ms).symmetry_residual() < 1e-12);
  CHECK_FALSE(verify_flatness(heisenberg3()));
}

TEST_CASE("semidirect hyperbolic models have constant curvature -rate^2") {
  for (int d : {1, 2, 4}) {
    for (double rate : {1.0, 0.5}) {
      SemidirectHyperbolicSpec spec;
      spec.field_dim = d;
      spec.rate = rate;
      const InvariantMetricSpace ms(build_semidirect_hyperbolic(spec));
      for (double k : random_sectional_curvatures(ms, 30, 7)) CHECK(std::abs(k + rate * rate) < 1e-10);
    }
  }
  // A skew part in the derivation does not change the metric.
  SemidirectHyperbolicSpec twisted;
  twisted.field_dim = 2;
  twisted.rate = 0.5;
  twisted.rotation = 0.3;
  const InvariantMetricSpace ms(build_semidirect_hyperbolic(twisted));
  for (double k : random_sectional_curvatures(ms, 30, 8)) CHECK(std::abs(k + 0.25) < 1e-10);
}

TEST_CASE("catalog curvature tensors have the algebraic symmetries") {
  for (const std::string id : {"N(1,1)", "Sp(2)/U(1)Sp(1)", "Spin(9)/Spin(7)", "SU(2,1)/SU(2)"}) {
    CAPTURE(id);
    const InvariantMetricSpace ms(build_catalog_space(id));
    CHECK(ms.invariance_residual() < 1e-12);
    const CurvatureTensor r = curvature_tensor(ms);
    CHECK(r.dim() == ms.dim());
    CHECK(r.symmetry_residual() < 1e-10);
  }
}

TEST_CASE("frame is orthonormal for the block-scaled metric") {
  const InvariantMetricSpace ms(build_catalog_space("Sp(2)/U(1)Sp(1)"), {2.0, 0.5});
  const Mat f = ms.frame();
  CHECK((f.transpose() * ms.metric() * f - Mat::Identity(ms.dim(), ms.dim())).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS(InvariantMetricSpace(build_catalog_space("Sp(2)/U(1)Sp(1)"), {1.0, -1.0}));
}

TEST_CASE("sectional curvature rejects non-orthonormal planes") {
  const InvariantMetricSpace ms(sphere_space(2));
  CHECK_THROWS(sectional_curvature(ms, unit(2, 0), unit(2, 0)));
  CHECK_THROWS(sectional_curvature(ms, 2.0 * unit(2, 0), unit(2, 1)));
}

TEST_CASE("flatness of abelian and screw-motion spaces") {
  ReductiveSpace flat;
  flat.id = "R^3";
  flat.algebra = LieAlgebra(3);
  flat.blocks = {{0, 1, 2}};
  const FlatnessReport a = flatness_report(flat);
  CHECK(a.flat);
  CHECK_FALSE(a.shifted);

  for (int n : {1, 2}) {
    const FlatnessReport r = flatness_report(build_trivial_module_space(TrivialBranch::EuclideanScrew, n));
    CHECK(r.flat);
    CHECK(r.shifted);
    CHECK(r.curvature_max < 1e-9);
  }
  CHECK_FALSE(verify_flatness(build_catalog_space("SU(3)/SU(2)")));
}
