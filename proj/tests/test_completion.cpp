#include "isocoh/completion.hpp"

#include <doctest.h>

using namespace isocoh;

namespace {

// so(2) rotating a plane: basis h, x, y with [h, x] = y, [h, y] = -x.
// Every [x, y] = c h satisfies Jacobi: so(3) for c > 0, sl(2,R) for c < 0,
// e(2) for c = 0.
CompletionProblem rotation_problem() {
  LieAlgebra g(3);
  g.set_constant(0, 1, 2, 1.0);
  g.set_constant(0, 2, 1, -1.0);
  return {g, {1, 2}, Subspace::coordinate(3, {0})};
}

// Weights 1 and 2: [a, x] = x, [a, y] = 2y. Jacobi on (a, x, y) forces
// 3 [x, y] = 0 for [x, y] in span(a).
CompletionProblem weight_problem() {
  LieAlgebra g(3);
  g.set_constant(0, 1, 1, 1.0);
  g.set_constant(0, 2, 2, 2.0);
  return {g, {1, 2}, Subspace::coordinate(3, {0})};
}

}  // namespace

TEST_CASE("rotation problem has a one-parameter family of completions") {
  const CompletionSolution sol = complete_bracket(rotation_problem());
  CHECK_FALSE(sol.empty());
  CHECK(sol.unknowns() == 1);
  CHECK(sol.dimension() == 1);
  CHECK(sol.particular().norm() < 1e-12);
  CHECK(sol.pairs().size() == 1);
  Vec t(1);
  t << 1.0 / sol.homogeneous()(0, 0);
  const LieAlgebra plus = sol.assemble_at(t);
  CHECK(jacobi_residual(plus) < 1e-12);
  CHECK(plus.c(1, 2, 0) == doctest::Approx(1.0));
  CHECK(fingerprint(plus).killing == Signature{0, 3, 0});
  const LieAlgebra minus = sol.assemble_at(-t);
  CHECK(fingerprint(minus).killing == Signature{2, 1, 0});
  CHECK(fingerprint(sol.assemble_at(Vec::Zero(1))).killing == Signature{0, 1, 2});
  CHECK((sol.point(t) - sol.homogeneous() * t).norm() < 1e-14);
}

TEST_CASE("weight problem forces the zero bracket") {
  const CompletionSolution sol = complete_bracket(weight_problem());
  CHECK_FALSE(sol.empty());
  CHECK(sol.dimension() == 0);
  CHECK(sol.particular().norm() < 1e-12);
  // Any nonzero value of [x, y] violates Jacobi by 3 |c|.
  Vec y(1);
  y << 0.1;
  CHECK(jacobi_report(sol.assemble(y)).absolute == doctest::Approx(0.3));
  const double probe = min_perturbed_residual(sol, Vec::Zero(0), 4, 1e-3, 1);
  CHECK(probe > 1e-4);
}

TEST_CASE("nonlinear problems are rejected") {
  CompletionProblem p = rotation_problem();
  p.target = Subspace::coordinate(3, {0, 1});
  CHECK_THROWS_AS(complete_bracket(p), std::invalid_argument);
}

TEST_CASE("completion keeps the skeleton outside the unknown block") {
  const CompletionSolution sol = complete_bracket(rotation_problem());
  const LieAlgebra g = sol.assemble_at(Vec::Ones(1));
  CHECK(g.c(0, 1, 2) == 1.0);
  CHECK(g.c(0, 2, 1) == -1.0);
}
