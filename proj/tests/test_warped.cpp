#include "isocoh/warped.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

using namespace isocoh;

namespace {

WarpedProduct make(IntervalKind kind, const std::string& profile, Fiber fiber, double length = 0.0) {
  WarpedProduct w;
  w.interval = kind;
  w.length = length;
  w.profile = parse_profile(profile);
  w.fiber = std::move(fiber);
  return w;
}

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("profile grammar") {
  const ProfileValue e = parse_profile("exp(-0.5*t)")(2.0);
  CHECK(e.f == doctest::Approx(std::exp(-1.0)));
  CHECK(e.df == doctest::Approx(-0.5 * std::exp(-1.0)));
  CHECK(e.ddf == doctest::Approx(0.25 * std::exp(-1.0)));
  const ProfileValue l = parse_profile("exp(-l*t)", {{"l", 2.0}})(1.0);
  CHECK(l.f == doctest::Approx(std::exp(-2.0)));
  CHECK(parse_profile("sin")(0.3).ddf == doctest::Approx(-std::sin(0.3)));
  CHECK(parse_profile("sinh")(0.3).df == doctest::Approx(std::cosh(0.3)));
  CHECK(parse_profile("const(2.5)")(7.0).f == 2.5);
  CHECK(parse_profile("const", {{"c", 3.0}})(7.0).f == 3.0);
  const ProfileValue p = parse_profile("poly(1,0,1)")(2.0);
  CHECK(p.f == doctest::Approx(5.0));
  CHECK(p.df == doctest::Approx(4.0));
  CHECK(p.ddf == doctest::Approx(2.0));
  CHECK_THROWS_AS(parse_profile("cosh"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("poly()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("exp(-x*t)"), std::invalid_argument);
}

TEST_CASE("tabulated profiles interpolate linearly") {
  const Profile p = profile_from_table({{{0.0, 1.0, 0.0, 0.0}}, {{1.0, 3.0, 2.0, 4.0}}});
  const ProfileValue v = p(0.25);
  CHECK(v.f == doctest::Approx(1.5));
  CHECK(v.df == doctest::Approx(0.5));
  CHECK(v.ddf == doctest::Approx(1.0));

  const std::string path = "isocoh_profile_test.csv";
  {
    std::ofstream f(path);
    f << "t,f,df,ddf\n0,2,0,0\n2,4,2,2\n";
  }
  const Profile q = load_profile_csv(path);
  CHECK(q(1.0).f == doctest::Approx(3.0));
  std::remove(path.c_str());
  CHECK_THROWS(load_profile_csv("does-not-exist.csv"));
}

TEST_CASE("warped curvature closed forms on model spaces") {
  // sin on S^1 is the round S^2, sinh on S^2 is H^3, exp(-t) on R^2 is H^3.
  const WarpedProduct s2 = make(IntervalKind::Segment, "sin", round_sphere_fiber(1), std::numbers::pi);
  const WarpedProduct h3 = make(IntervalKind::HalfLine, "sinh", round_sphere_fiber(2));
  const WarpedProduct horo = make(IntervalKind::Line, "exp(-1*t)", flat_fiber(2));
  CHECK(warped_sectional_curvature(s2, 1.0, unit(2, 0), unit(2, 1)) == doctest::Approx(1.0));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const Vec x = random_unit_vector(3, rng);
    Vec y = random_unit_vector(3, rng);
    y -= y.dot(x) * x;
    y.normalize();
    CHECK(warped_sectional_curvature(h3, 0.8, x, y) == doctest::Approx(-1.0));
    CHECK(warped_sectional_curvature(horo, -0.4, x, y) == doctest::Approx(-1.0));
  }
  CHECK(warped_curvature_tensor(h3, 1.2).symmetry_residual() < 1e-12);
}

TEST_CASE("finite-difference oracle agrees with the closed form") {
  const WarpedProduct cases[] = {
      make(IntervalKind::Line, "exp(-1*t)", flat_fiber(2)),
      make(IntervalKind::Line, "exp(-0.5*t)", round_sphere_fiber(3)),
      make(IntervalKind::Segment, "sin", round_sphere_fiber(2), std::numbers::pi),
      make(IntervalKind::HalfLine, "sinh", round_sphere_fiber(2)),
      make(IntervalKind::Line, "poly(1,0,1)", round_sphere_fiber(2)),
  };
  for (const WarpedProduct& w : cases) {
    CAPTURE(w.profile.name());
    const WarpedAgreement a = compare_warped_curvature(w, 50, kDefaultSeed);
    CHECK(a.samples == 50);
    CHECK(a.max_difference < kFiniteDifferenceTol);
  }
}

TEST_CASE("oracle on a homogeneous fibre with non-constant curvature") {
  const Fiber berger = fiber_from_space(InvariantMetricSpace(build_catalog_space("SU(3)/SU(2)")));
  CHECK(berger.dim == 5);
  const WarpedProduct w = make(IntervalKind::Line, "poly(2,0.3)", berger);
  CHECK(compare_warped_curvature(w, 5, 3).max_difference < kFiniteDifferenceTol);
}

TEST_CASE("mixed planes have curvature -f''/f") {
  const WarpedProduct w = make(IntervalKind::Line, "poly(1,0,1)", flat_fiber(2));
  const double t = 0.7;
  CHECK(warped_sectional_curvature(w, t, unit(3, 0), unit(3, 1)) == doctest::Approx(-2.0 / (1.0 + t * t)));
  CHECK(warped_sectional_curvature_fd(w, t, unit(3, 0), unit(3, 1)) ==
        doctest::Approx(-2.0 / (1.0 + t * t)).epsilon(1e-6));
}

TEST_CASE("inhomogeneous classification by interval type") {
  const auto ii = validate_inhomogeneous(make(IntervalKind::HalfLine, "sinh", round_sphere_fiber(2)));
  CHECK(ii.case_label == "ii");
  CHECK(ii.fiber_check);
  CHECK(ii.warnings.empty());
  CHECK(ii.isotropy_cohomogeneity == 2);

  const auto iii =
      validate_inhomogeneous(make(IntervalKind::Segment, "sin", round_sphere_fiber(3), std::numbers::pi));
  CHECK(iii.case_label == "iii");
  CHECK(iii.warnings.empty());

  const auto i = validate_inhomogeneous(
      make(IntervalKind::Line, "exp(-1*t)", fiber_from_space(InvariantMetricSpace(sphere_space(2)))));
  CHECK(i.case_label == "i");
  CHECK(i.fiber_check);

  // A cone point that is not smooth is accepted with a warning.
  const auto cone = validate_inhomogeneous(make(IntervalKind::HalfLine, "poly(0,2)", round_sphere_fiber(2)));
  CHECK(cone.warnings.size() == 1);

  CHECK_THROWS(validate_inhomogeneous(make(IntervalKind::HalfLine, "exp(-1*t)", round_sphere_fiber(2))));
  CHECK_THROWS(validate_inhomogeneous(make(IntervalKind::Segment, "sin", round_sphere_fiber(2), 2.0)));
  // Case i needs a rank-one symmetric fibre; SU(3)/SU(2) is not symmetric.
  CHECK_THROWS(validate_inhomogeneous(make(
      IntervalKind::Line, "const(1)", fiber_from_space(InvariantMetricSpace(build_catalog_space("SU(3)/SU(2)"))))));
}
