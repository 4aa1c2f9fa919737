#include "isocoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isocoh {

namespace {

// Full V is needed for nullspaces of wide matrices.
Eigen::BDCSVD<Mat> svd_full(const Mat& a) {
  return Eigen::BDCSVD<Mat>(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

double rank_threshold(double sigma_max, double rel_tol) {
  return rel_tol * std::max(sigma_max, 1.0);
}

int numerical_rank(const Mat& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(a);
  const Vec& s = svd.singularValues();
  const double tol = rank_threshold(s.size() ? s(0) : 0.0, rel_tol);
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) ++r;
  }
  return r;
}

Mat nullspace(const Mat& a, double rel_tol) {
  const int n = static_cast<int>(a.cols());
  if (a.rows() == 0 || n == 0) return Mat::Identity(n, n);
  auto svd = svd_full(a);
  const Vec& s = svd.singularValues();
  const double tol = rank_threshold(s.size() ? s(0) : 0.0, rel_tol);
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) ++r;
  }
  return svd.matrixV().rightCols(n - r);
}

Mat orthonormal_range(const Mat& a, double rel_tol) {
  if (a.cols() == 0 || a.rows() == 0) return Mat(a.rows(), 0);
  auto svd = svd_full(a);
  const Vec& s = svd.singularValues();
  const double tol = rank_threshold(s.size() ? s(0) : 0.0, rel_tol);
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) ++r;
  }
  return svd.matrixU().leftCols(r);
}

double spectral_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

Vec random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = gauss(rng);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

Mat random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const Mat& spanning, const Mat& inner_product) {
  const int n = static_cast<int>(inner_product.rows());
  if (spanning.rows() != n) throw std::invalid_argument("Subspace::span: dimension mismatch");
  // Work in coordinates where the inner product is Euclidean: G = L L^T.
  Eigen::LLT<Mat> llt(inner_product);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("Subspace::span: inner product not positive definite");
  Mat lt = llt.matrixU();  // L^T
  Mat q = orthonormal_range(lt * spanning);
  Mat basis = lt.triangularView<Eigen::Upper>().solve(q);
  return Subspace(std::move(basis), inner_product);
}

Subspace Subspace::span(const Mat& spanning) {
  return span(spanning, Mat::Identity(spanning.rows(), spanning.rows()));
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(Mat(ambient_dim, 0), Mat::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::whole(int ambient_dim) {
  return Subspace(Mat::Identity(ambient_dim, ambient_dim), Mat::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::coordinate(int ambient_dim, const std::vector<int>& indices) {
  Mat b = Mat::Zero(ambient_dim, static_cast<int>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) {
    if (indices[c] < 0 || indices[c] >= ambient_dim) throw std::out_of_range("Subspace::coordinate");
    b(indices[c], static_cast<int>(c)) = 1.0;
  }
  return Subspace(std::move(b), Mat::Identity(ambient_dim, ambient_dim));
}

Mat Subspace::projector() const { return basis_ * basis_.transpose() * inner_; }

Vec Subspace::project(const Vec& v) const { return basis_ * coordinates(v); }

Vec Subspace::coordinates(const Vec& v) const { return basis_.transpose() * (inner_ * v); }

double Subspace::distance(const Vec& v) const {
  Vec r = v - project(v);
  return std::sqrt(std::max(0.0, r.dot(inner_ * r)));
}

bool Subspace::contains(const Subspace& other, double tol) const {
  for (int j = 0; j < other.dim(); ++j) {
    if (distance(other.basis_.col(j)) > tol) return false;
  }
  return true;
}

bool Subspace::equals(const Subspace& other, double tol) const {
  return dim() == other.dim() && contains(other, tol) && other.contains(*this, tol);
}

Subspace Subspace::intersection(const Subspace& other) const {
  // x = B a = C b  <=>  [B, -C] (a; b) = 0
  if (dim() == 0 || other.dim() == 0) return zero(ambient_dim());
  Mat stacked(ambient_dim(), dim() + other.dim());
  stacked << basis_, -other.basis_;
  Mat ns = nullspace(stacked);
  return span(basis_ * ns.topRows(dim()), inner_);
}

Subspace Subspace::complement() const {
  // {x : B^T G x = 0}
  const int n = ambient_dim();
  if (dim() == 0) return Subspace(Mat::Identity(n, n), inner_);
  Mat ns = nullspace(basis_.transpose() * inner_);
  return span(ns, inner_);
}

// ---------------------------------------------------------------------------
// AffineSolver

AffineSolver::AffineSolver(int unknowns)
    : particular_(Vec::Zero(unknowns)), basis_(Mat::Identity(unknowns, unknowns)) {}

void AffineSolver::add(const Mat& a, const Vec& b) {
  if (a.cols() != unknowns()) throw std::invalid_argument("AffineSolver::add: column mismatch");
  if (a.rows() == 0) return;
  const Vec r = a * particular_ + b;
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  if (dimension() == 0) {
    const double res = r.cwiseAbs().maxCoeff();
    if (res > kRankRelTol * scale) {
      consistent_ = false;
      inconsistency_ = std::max(inconsistency_, res);
    }
    return;
  }
  const Mat m = a * basis_;
  auto svd = Eigen::BDCSVD<Mat>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  const double tol = kRankRelTol * std::max(scale, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) ++rank;
  }
  Vec y = Vec::Zero(dimension());
  if (rank > 0) {
    const Mat& u = svd.matrixU();
    const Mat& v = svd.matrixV();
    Vec ur = u.leftCols(rank).transpose() * (-r);
    for (int i = 0; i < rank; ++i) ur(i) /= s(i);
    y = v.leftCols(rank) * ur;
  }
  const double res = (m * y + r).cwiseAbs().maxCoeff();
  if (res > kRankRelTol * scale) {
    consistent_ = false;
    inconsistency_ = std::max(inconsistency_, res);
  }
  if (rank > 0) {
    particular_ += basis_ * y;
    basis_ = basis_ * svd.matrixV().rightCols(dimension() - rank);
  }
}

RowBatcher::RowBatcher(AffineSolver& solver, int min_rows) : solver_(solver), min_rows_(min_rows) {}

RowBatcher::~RowBatcher() { flush(); }

void RowBatcher::push(const Vec& row, double rhs) {
  rows_.push_back(row);
  rhs_.push_back(rhs);
  if (static_cast<int>(rows_.size()) >= std::max(min_rows_, solver_.dimension())) flush();
}

void RowBatcher::flush() {
  if (rows_.empty()) return;
  Mat a(static_cast<int>(rows_.size()), solver_.unknowns());
  Vec b(static_cast<int>(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    a.row(static_cast<int>(i)) = rows_[i].transpose();
    b(static_cast<int>(i)) = rhs_[i];
  }
  rows_.clear();
  rhs_.clear();
  solver_.add(a, b);
}

}  // namespace isocoh
