#include "isocoh/reps.hpp"

#include <doctest.h>

#include <map>

using namespace isocoh;

namespace {

// Orbit dimension by a direct SVD of the infinitesimal action, without the
// library's rank helpers.
int direct_orbit_dim(const Representation& rep, const Vec& v) {
  Mat t(rep.space_dim(), rep.algebra_dim());
  for (int a = 0; a < rep.algebra_dim(); ++a) t.col(a) = rep.matrix(a) * v;
  if (t.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(t);
  const auto s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i) r += s(i) > 1e-7 * std::max(1.0, s(0)) ? 1 : 0;
  return r;
}

int direct_cohomogeneity(const Representation& rep, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int i = 0; i < 10; ++i) best = std::max(best, direct_orbit_dim(rep, random_unit_vector(rep.space_dim(), rng)));
  return rep.space_dim() - best;
}

}  // namespace

TEST_CASE("transitive sphere actions have cohomogeneity one") {
  // Isotropy dimensions of the standard transitive actions on spheres.
  const std::map<std::string, int> isotropy{{"SO(3)", 1}, {"SO(5)", 6},       {"SU(2)", 0},       {"SU(3)", 3},
                                            {"Sp(1)", 0}, {"Sp(2)", 3},       {"U(2)", 1},        {"Sp(1)Sp(1)", 3},
                                            {"Sp(1)U(1)", 1}, {"G2", 8},      {"Spin(7)", 14},    {"Spin(9)", 21}};
  const auto rows = sphere_transitive_rows();
  CHECK(rows.size() == 12);
  for (const auto& row : rows) {
    CAPTURE(row.id);
    CHECK_NOTHROW(validate(row.rep));
    CHECK(cohomogeneity(row.rep) == 1);
    CHECK(direct_cohomogeneity(row.rep, 3) == 1);
    REQUIRE(isotropy.count(row.id) == 1);
    CHECK(row.expected_isotropy_dim == isotropy.at(row.id));
    std::mt19937_64 rng(4);
    const Vec v = random_unit_vector(row.rep.space_dim(), rng);
    CHECK(isotropy_subalgebra(row.rep, v).dim() == row.expected_isotropy_dim);
  }
}

TEST_CASE("the five reducible rows have cohomogeneity two") {
  const auto rows = cohomogeneity_two_rows();
  CHECK(rows.size() == 5);
  const std::vector<std::pair<int, int>> dims{{2, 6}, {2, 4}, {3, 4}, {6, 8}, {7, 8}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TwoBlockRep& r = rows[i];
    CAPTURE(r.id);
    CHECK_NOTHROW(validate(r.rep));
    CHECK(r.m1_dim == dims[i].first);
    CHECK(r.m2_dim() == dims[i].second);
    CHECK(cohomogeneity(r.rep) == 2);
    CHECK(direct_cohomogeneity(r.rep, 5) == 2);
    CHECK(kernel_ideal(r.on_m2()).dim() == 0);
    CHECK(kernel_ideal(r.on_m1()).dim() < r.rep.algebra_dim());
    // Each block alone is a transitive sphere action.
    CHECK(cohomogeneity(r.on_m2()) == 1);
  }
}

TEST_CASE("unitary determinant twist") {
  CHECK(cohomogeneity(unitary_det_rep(3, 1).rep) == 2);
  CHECK(cohomogeneity(unitary_det_rep(2, 2).rep) == 2);
  // Untwisted: U(n) is trivial on C, so the extra circle orbit disappears.
  CHECK(cohomogeneity(unitary_det_rep(3, 0).rep) == 3);
}

TEST_CASE("u(1) + sp(q) weight representations") {
  for (int q = 1; q <= 2; ++q) {
    const TwoBlockRep r = u1_sp_weight_rep(q, 1);
    CHECK(r.m1_dim == 2);
    CHECK(r.m2_dim() == 4 * q);
    CHECK(direct_cohomogeneity(r.rep, 6) == 2);
  }
}

TEST_CASE("Clifford isotropy representations") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {6, 1}, {7, 1}}) {
    CAPTURE(n);
    CAPTURE(q);
    const TwoBlockRep r = clifford_isotropy_rep(n, q);
    CHECK(r.m1_dim == n);
    CHECK(cohomogeneity(r.rep) == 2);
    CHECK(direct_cohomogeneity(r.rep, 7) == 2);
    CHECK(kernel_ideal(r.on_m2()).dim() == 0);
  }
}

TEST_CASE("g2 fixes a spinor and is transitive on the 6-sphere") {
  const auto [on7, on8] = g2_representations();
  CHECK(on7.algebra_dim() == 14);
  CHECK(fingerprint(on7.algebra()).killing == Signature{0, 14, 0});
  CHECK(cohomogeneity(on7) == 1);
  CHECK(fixed_subspace(on8, Subspace::whole(14)).dim() == 1);
  CHECK(cohomogeneity(on8) == 2);
}

TEST_CASE("product control splits") {
  const TwoBlockRep r = product_control_rep();
  CHECK(splitting_criterion(r.rep, r.m1(), r.m2()).splits);
  CHECK(cohomogeneity(r.rep) == 2);
}
