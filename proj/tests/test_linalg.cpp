#include "isocoh/linalg.hpp"

#include <doctest.h>

using namespace isocoh;

namespace {

Mat random_matrix(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m(i, j) = n(rng);
  }
  return m;
}

Mat low_rank(int r, int c, int rank, std::mt19937_64& rng) {
  return random_matrix(r, rank, rng) * random_matrix(rank, c, rng);
}

}  // namespace

TEST_CASE("numerical rank of products of thin factors") {
  std::mt19937_64 rng(1);
  for (int rank = 0; rank <= 5; ++rank) {
    const Mat a = rank == 0 ? Mat::Zero(7, 6) : low_rank(7, 6, rank, rng);
    CHECK(numerical_rank(a) == rank);
  }
  CHECK(numerical_rank(Mat(0, 4)) == 0);
}

TEST_CASE("round-off sized matrices have rank zero") {
  Mat a = Mat::Zero(3, 3);
  a(0, 1) = 1e-12;
  CHECK(numerical_rank(a) == 0);
}

TEST_CASE("nullspace is orthonormal and annihilated") {
  std::mt19937_64 rng(2);
  const Mat a = low_rank(4, 9, 3, rng);
  const Mat n = nullspace(a);
  CHECK(n.cols() == 6);
  CHECK((a * n).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((n.transpose() * n - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orthonormal range spans the columns") {
  std::mt19937_64 rng(3);
  const Mat a = low_rank(8, 5, 2, rng);
  const Mat q = orthonormal_range(a);
  CHECK(q.cols() == 2);
  CHECK((q * (q.transpose() * a) - a).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("random orthogonal matrices are seeded and orthogonal") {
  std::mt19937_64 r1(7), r2(7);
  const Mat q1 = random_orthogonal(6, r1);
  const Mat q2 = random_orthogonal(6, r2);
  CHECK(q1 == q2);
  CHECK((q1.transpose() * q1 - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
  std::mt19937_64 r3(9);
  CHECK(std::abs(random_unit_vector(5, r3).norm() - 1.0) < 1e-14);
}

TEST_CASE("coordinate subspaces intersect and complement as index sets") {
  const Subspace a = Subspace::coordinate(6, {0, 1, 2, 3});
  const Subspace b = Subspace::coordinate(6, {2, 3, 4});
  const Subspace i = a.intersection(b);
  CHECK(i.dim() == 2);
  CHECK(i.equals(Subspace::coordinate(6, {2, 3})));
  CHECK(a.complement().equals(Subspace::coordinate(6, {4, 5})));
  CHECK(a.contains(i));
  CHECK_FALSE(i.contains(a));
  CHECK(Subspace::zero(6).dim() == 0);
  CHECK(Subspace::whole(6).complement().dim() == 0);
}

TEST_CASE("projector is self-adjoint for a non-identity inner product") {
  std::mt19937_64 rng(4);
  const Mat r = random_matrix(5, 5, rng);
  const Mat g = r.transpose() * r + Mat::Identity(5, 5);
  const Subspace s = Subspace::span(random_matrix(5, 2, rng), g);
  const Mat p = s.projector();
  CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((g * p - p.transpose() * g).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((s.basis().transpose() * g * s.basis() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  const Vec v = random_matrix(5, 1, rng);
  const Vec perp = v - s.project(v);
  CHECK(std::abs(std::sqrt(perp.dot(g * perp)) - s.distance(v)) < 1e-10);
  CHECK(s.complement().dim() == 3);
}

TEST_CASE("dependent spanning columns are dropped") {
  Mat m(3, 3);
  m << 1, 2, 0, 0, 0, 0, 0, 0, 1;
  CHECK(Subspace::span(m).dim() == 2);
}

TEST_CASE("affine solver matches a direct least-squares solve") {
  std::mt19937_64 rng(5);
  const int n = 12;
  const Mat a = low_rank(20, n, 7, rng);
  const Vec x0 = random_matrix(n, 1, rng);
  const Vec b = -a * x0;

  AffineSolver whole(n);
  whole.add(a, b);
  AffineSolver blocks(n);
  for (int r = 0; r < 20; r += 3) {
    const int h = std::min(3, 20 - r);
    blocks.add(a.middleRows(r, h), b.segment(r, h));
  }
  for (const AffineSolver* s : {&whole, &blocks}) {
    CHECK(s->consistent());
    CHECK(s->dimension() == n - 7);
    CHECK((a * s->particular() + b).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((a * s->basis()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((s->basis().transpose() * s->particular()).cwiseAbs().maxCoeff() < 1e-9);
  }
  // Minimum-norm particular solutions agree, independently of block order.
  const Vec direct = a.completeOrthogonalDecomposition().solve(-b);
  CHECK((whole.particular() - direct).norm() < 1e-8);
  CHECK((blocks.particular() - direct).norm() < 1e-8);
}

TEST_CASE("affine solver detects inconsistency") {
  AffineSolver s(2);
  Mat a(1, 2);
  a << 1, 1;
  Vec b(1);
  b << -1;
  s.add(a, b);
  b << -2;
  s.add(a, b);
  CHECK_FALSE(s.consistent());
  CHECK(s.inconsistency() > 0.1);
}

TEST_CASE("row batcher flushes into the solver") {
  AffineSolver s(4);
  {
    RowBatcher batch(s, 2);
    for (int i = 0; i < 3; ++i) {
      Vec r = Vec::Zero(4);
      r(i) = 1.0;
      batch.push(r, -static_cast<double>(i + 1));
    }
  }
  CHECK(s.dimension() == 1);
  CHECK(s.particular()(0) == doctest::Approx(1.0));
  CHECK(s.particular()(2) == doctest::Approx(3.0));
}
