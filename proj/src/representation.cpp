#include "isocoh/representation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace isocoh {

Representation::Representation(LieAlgebra algebra, std::vector<Mat> matrices)
    : algebra_(std::move(algebra)), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != algebra_.dim()) {
    throw std::invalid_argument("Representation: need one matrix per basis element");
  }
  space_dim_ = matrices_.empty() ? 0 : static_cast<int>(matrices_.front().rows());
  for (const Mat& m : matrices_) {
    if (m.rows() != space_dim_ || m.cols() != space_dim_) throw std::invalid_argument("Representation: matrix size");
  }
  inner_ = Mat::Identity(space_dim_, space_dim_);
}

Representation::Representation(LieAlgebra algebra, std::vector<Mat> matrices, Mat inner_product)
    : Representation(std::move(algebra), std::move(matrices)) {
  if (matrices_.empty()) space_dim_ = static_cast<int>(inner_product.rows());
  if (inner_product.rows() != space_dim_ || inner_product.cols() != space_dim_) {
    throw std::invalid_argument("Representation: inner product size");
  }
  inner_ = std::move(inner_product);
}

Representation Representation::trivial(const LieAlgebra& algebra, int space_dim) {
  std::vector<Mat> mats(algebra.dim(), Mat::Zero(space_dim, space_dim));
  return Representation(algebra, std::move(mats), Mat::Identity(space_dim, space_dim));
}

Mat Representation::act(const Vec& xi) const {
  if (xi.size() != algebra_dim()) throw std::invalid_argument("Representation::act: dimension mismatch");
  Mat m = Mat::Zero(space_dim_, space_dim_);
  for (int i = 0; i < algebra_dim(); ++i) {
    if (xi(i) != 0.0) m += xi(i) * matrices_[i];
  }
  return m;
}

double Representation::homomorphism_residual() const {
  double r = 0.0;
  const int n = algebra_dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mat lhs = act(algebra_.bracket_basis(i, j));
      const Mat rhs = matrices_[i] * matrices_[j] - matrices_[j] * matrices_[i];
      if (lhs.size()) r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return r;
}

double Representation::skew_residual() const {
  double r = 0.0;
  for (const Mat& m : matrices_) {
    if (m.size()) r = std::max(r, (m.transpose() * inner_ + inner_ * m).cwiseAbs().maxCoeff());
  }
  return r;
}

Representation Representation::conjugated(const Mat& q) const {
  Eigen::FullPivLU<Mat> lu(q);
  if (q.rows() != space_dim_ || !lu.isInvertible()) throw std::invalid_argument("Representation::conjugated");
  std::vector<Mat> mats;
  mats.reserve(matrices_.size());
  for (const Mat& m : matrices_) mats.push_back(lu.solve(m * q));
  return Representation(algebra_, std::move(mats), q.transpose() * inner_ * q);
}

Representation Representation::restricted(const Subspace& sub, double tol) const {
  if (sub.ambient_dim() != space_dim_) throw std::invalid_argument("Representation::restricted: dimension mismatch");
  const Mat& b = sub.basis();
  std::vector<Mat> mats;
  mats.reserve(matrices_.size());
  for (const Mat& m : matrices_) {
    for (int c = 0; c < sub.dim(); ++c) {
      if (sub.distance(m * b.col(c)) > tol) {
        throw std::invalid_argument("Representation::restricted: subspace not invariant");
      }
    }
    mats.push_back(b.transpose() * sub.inner_product() * m * b);
  }
  return Representation(algebra_, std::move(mats), Mat::Identity(sub.dim(), sub.dim()));
}

Representation Representation::pulled_back(const LieAlgebra& source, const Mat& f) const {
  if (f.rows() != algebra_dim() || f.cols() != source.dim()) {
    throw std::invalid_argument("Representation::pulled_back: map has wrong size");
  }
  std::vector<Mat> mats;
  for (int i = 0; i < source.dim(); ++i) mats.push_back(act(f.col(i)));
  return Representation(source, std::move(mats), inner_);
}

void validate(const Representation& rep, double tol) {
  const double h = rep.homomorphism_residual();
  if (h > tol) throw std::invalid_argument("representation: homomorphism residual " + std::to_string(h));
  const double s = rep.skew_residual();
  if (s > tol) throw std::invalid_argument("representation: not skew (residual " + std::to_string(s) + ")");
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw std::invalid_argument("direct_sum: algebra mismatch");
  const int da = a.space_dim(), db = b.space_dim();
  std::vector<Mat> mats;
  for (int i = 0; i < a.algebra_dim(); ++i) {
    Mat m = Mat::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = a.matrix(i);
    m.bottomRightCorner(db, db) = b.matrix(i);
    mats.push_back(std::move(m));
  }
  Mat g = Mat::Zero(da + db, da + db);
  g.topLeftCorner(da, da) = a.inner_product();
  g.bottomRightCorner(db, db) = b.inner_product();
  return Representation(a.algebra(), std::move(mats), std::move(g));
}

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return k;
}

}  // namespace

Representation tensor_product(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw std::invalid_argument("tensor_product: algebra mismatch");
  const int da = a.space_dim(), db = b.space_dim();
  const Mat ia = Mat::Identity(da, da), ib = Mat::Identity(db, db);
  std::vector<Mat> mats;
  for (int i = 0; i < a.algebra_dim(); ++i) mats.push_back(kron(a.matrix(i), ib) + kron(ia, b.matrix(i)));
  return Representation(a.algebra(), std::move(mats), kron(a.inner_product(), b.inner_product()));
}

LieAlgebra semidirect_sum(const Representation& rep, double tol) {
  const double h = rep.homomorphism_residual();
  if (h > tol) throw std::invalid_argument("semidirect_sum: invalid representation (residual " + std::to_string(h) + ")");
  const LieAlgebra& k = rep.algebra();
  const int nk = k.dim(), nv = rep.space_dim();
  LieAlgebra g(nk + nv);
  for (int i = 0; i < nk; ++i) {
    for (int j = i + 1; j < nk; ++j) {
      for (int l = 0; l < nk; ++l) {
        if (k.c(i, j, l) != 0.0) g.set_constant(i, j, l, k.c(i, j, l));
      }
    }
    for (int a = 0; a < nv; ++a) {
      for (int b = 0; b < nv; ++b) {
        const double v = rep.matrix(i)(b, a);
        if (v != 0.0) g.set_constant(i, nk + a, nk + b, v);
      }
    }
  }
  Mat ip = Mat::Zero(nk + nv, nk + nv);
  ip.topLeftCorner(nk, nk) = k.inner_product();
  ip.bottomRightCorner(nv, nv) = rep.inner_product();
  g.set_inner_product(ip);
  return g;
}

Representation matrix_lie_algebra(const std::vector<Mat>& mats, double tol) {
  const int d = static_cast<int>(mats.size());
  if (d == 0) return Representation(LieAlgebra(0), {});
  const int n = static_cast<int>(mats.front().rows());
  Mat flat(n * n, d);
  for (int i = 0; i < d; ++i) {
    if (mats[i].rows() != n || mats[i].cols() != n) throw std::invalid_argument("matrix_lie_algebra: size mismatch");
    flat.col(i) = Eigen::Map<const Vec>(mats[i].data(), n * n);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(flat);
  if (qr.rank() != d) throw std::invalid_argument("matrix_lie_algebra: matrices are linearly dependent");
  LieAlgebra alg(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Mat comm = mats[i] * mats[j] - mats[j] * mats[i];
      const Vec target = Eigen::Map<const Vec>(comm.data(), n * n);
      Vec coeffs = qr.solve(target);
      const double res = (flat * coeffs - target).cwiseAbs().maxCoeff();
      if (res > tol * std::max(1.0, target.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("matrix_lie_algebra: span not closed under commutators");
      }
      // Snap round-off so exactly representable constants stay exact.
      for (int k = 0; k < d; ++k) {
        const double r = std::round(coeffs(k) * 2.0) / 2.0;
        if (std::abs(coeffs(k) - r) < 1e-12) coeffs(k) = r;
      }
      alg.set_bracket(i, j, coeffs);
    }
  }
  return Representation(alg, mats);
}

Representation adjoint_representation(const LieAlgebra& alg) {
  std::vector<Mat> mats;
  for (int i = 0; i < alg.dim(); ++i) mats.push_back(alg.ad_basis(i));
  return Representation(alg, std::move(mats), alg.inner_product());
}

namespace {

Mat evaluation_matrix(const Representation& rep, const Vec& v) {
  if (v.size() != rep.space_dim()) throw std::invalid_argument("orbit: vector has wrong length");
  if (v.norm() == 0.0) throw std::invalid_argument("orbit: zero vector");
  Mat e(rep.space_dim(), rep.algebra_dim());
  for (int i = 0; i < rep.algebra_dim(); ++i) e.col(i) = rep.matrix(i) * v;
  return e;
}

}  // namespace

int orbit_dimension(const Representation& rep, const Vec& v) {
  return numerical_rank(evaluation_matrix(rep, v));
}

std::vector<int> orbit_dimension_samples(const Representation& rep, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("orbit sampling: need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<int> dims;
  dims.reserve(samples);
  for (int s = 0; s < samples; ++s) dims.push_back(orbit_dimension(rep, random_unit_vector(rep.space_dim(), rng)));
  return dims;
}

int cohomogeneity(const Representation& rep, int samples, std::uint64_t seed) {
  if (rep.space_dim() == 0) return 0;
  const auto dims = orbit_dimension_samples(rep, samples, seed);
  return rep.space_dim() - *std::max_element(dims.begin(), dims.end());
}

Subspace isotropy_subalgebra(const Representation& rep, const Vec& v) {
  return Subspace::span(nullspace(evaluation_matrix(rep, v)), rep.algebra().inner_product());
}

Subspace fixed_subspace(const Representation& rep, const Subspace& sub) {
  const int n = rep.space_dim();
  if (sub.dim() == 0) return Subspace::span(Mat::Identity(n, n), rep.inner_product());
  Mat stacked(n * sub.dim(), n);
  for (int c = 0; c < sub.dim(); ++c) stacked.middleRows(c * n, n) = rep.act(sub.basis().col(c));
  return Subspace::span(nullspace(stacked), rep.inner_product());
}

Subspace kernel_ideal(const Representation& rep) {
  const int n = rep.space_dim(), k = rep.algebra_dim();
  if (k == 0) return Subspace::zero(0);
  Mat m(n * n, k);
  for (int i = 0; i < k; ++i) m.col(i) = Eigen::Map<const Vec>(rep.matrix(i).data(), n * n);
  return Subspace::span(nullspace(m), rep.algebra().inner_product());
}

std::vector<Mat> equivariant_maps(const Representation& a, const Representation& b) {
  if (a.algebra_dim() != b.algebra_dim() || !(a.algebra() == b.algebra())) {
    throw std::invalid_argument("hom space: algebra mismatch");
  }
  const int da = a.space_dim(), db = b.space_dim();
  const int unknowns = da * db;
  AffineSolver solver(unknowns);
  const Mat ia = Mat::Identity(da, da), ib = Mat::Identity(db, db);
  // Column-major vec: vec(A R_a) = (R_a^T x I) vec(A), vec(R_b A) = (I x R_b) vec(A).
  Mat block;
  int filled = 0;
  for (int i = 0; i < a.algebra_dim(); ++i) {
    const Mat rows = kron(a.matrix(i).transpose(), ib) - kron(ia, b.matrix(i));
    if (block.rows() == 0) block.resize(0, unknowns);
    block.conservativeResize(filled + rows.rows(), unknowns);
    block.middleRows(filled, rows.rows()) = rows;
    filled += static_cast<int>(rows.rows());
    if (filled >= std::max(128, solver.dimension()) || i + 1 == a.algebra_dim()) {
      solver.add(block);
      block.resize(0, unknowns);
      filled = 0;
    }
  }
  std::vector<Mat> maps;
  for (int c = 0; c < solver.dimension(); ++c) {
    maps.push_back(Eigen::Map<const Mat>(solver.basis().col(c).data(), db, da));
  }
  return maps;
}

int hom_space_dimension(const Representation& a, const Representation& b) {
  return static_cast<int>(equivariant_maps(a, b).size());
}

SplittingResult splitting_criterion(const Representation& rep, const Subspace& m1, const Subspace& m2, double tol) {
  const int n = rep.space_dim();
  if (m1.ambient_dim() != n || m2.ambient_dim() != n) throw std::invalid_argument("splitting: dimension mismatch");
  if (m1.dim() == 0 || m2.dim() == 0 || m1.dim() + m2.dim() != n) {
    throw std::invalid_argument("splitting: need a decomposition into two nonzero blocks");
  }
  for (int c = 0; c < m2.dim(); ++c) {
    if (m1.distance(m2.basis().col(c)) < 1.0 - tol) throw std::invalid_argument("splitting: blocks not orthogonal");
  }
  const Representation r1 = rep.restricted(m1, tol);
  const Representation r2 = rep.restricted(m2, tol);
  SplittingResult out;
  out.kernel1 = kernel_ideal(r1);
  out.kernel2 = kernel_ideal(r2);
  out.fix1 = fixed_subspace(rep, out.kernel1);
  out.fix2 = fixed_subspace(rep, out.kernel2);
  out.splits = out.kernel1.dim() > 0 && out.kernel2.dim() > 0 && out.fix1.equals(m1) && out.fix2.equals(m2);
  return out;
}

}  // namespace isocoh
