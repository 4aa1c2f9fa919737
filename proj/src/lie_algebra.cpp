#include "isocoh/lie_algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace isocoh {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  inner_ = Mat::Identity(dim, dim);
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("LieAlgebra: basis index out of range");
}

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
  check_index(i);
  check_index(j);
  if (v.size() != dim_) throw std::invalid_argument("LieAlgebra::set_bracket: dimension mismatch");
  if (i == j) {
    if (v.cwiseAbs().maxCoeff() != 0.0) throw std::invalid_argument("LieAlgebra::set_bracket: [b_i,b_i] must vanish");
    return;
  }
  for (int k = 0; k < dim_; ++k) {
    c_[index(i, j, k)] = v(k);
    c_[index(j, i, k)] = -v(k);
  }
}

void LieAlgebra::set_constant(int i, int j, int k, double value) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) {
    if (value != 0.0) throw std::invalid_argument("LieAlgebra::set_constant: [b_i,b_i] must vanish");
    return;
  }
  c_[index(i, j, k)] = value;
  c_[index(j, i, k)] = -value;
}

void LieAlgebra::add_constant(int i, int j, int k, double value) {
  set_constant(i, j, k, c(i, j, k) + value);
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  Vec v(dim_);
  for (int k = 0; k < dim_; ++k) v(k) = c_[index(i, j, k)];
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      const double* row = &c_[index(i, j, 0)];
      for (int k = 0; k < dim_; ++k) out(k) += w * row[k];
    }
  }
  return out;
}

Mat LieAlgebra::ad_basis(int i) const {
  check_index(i);
  Mat a(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int k = 0; k < dim_; ++k) a(k, j) = c_[index(i, j, k)];
  }
  return a;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("LieAlgebra::ad: dimension mismatch");
  Mat a = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) != 0.0) a += x(i) * ad_basis(i);
  }
  return a;
}

void LieAlgebra::set_inner_product(const Mat& g) {
  if (g.rows() != dim_ || g.cols() != dim_) throw std::invalid_argument("LieAlgebra: inner product has wrong size");
  if (dim_ > 0) {
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
      throw std::invalid_argument("LieAlgebra: inner product not symmetric");
    }
    Eigen::LLT<Mat> llt(g);
    if (llt.info() != Eigen::Success) throw std::invalid_argument("LieAlgebra: inner product not positive definite");
  }
  inner_ = g;
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != dim_) {
    throw std::invalid_argument("LieAlgebra: label count does not match dimension");
  }
  labels_ = std::move(labels);
}

std::string LieAlgebra::label(int i) const {
  check_index(i);
  if (!labels_.empty()) return labels_[i];
  return "b" + std::to_string(i);
}

double LieAlgebra::max_abs_constant() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double LieAlgebra::antisymmetry_residual() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) m = std::max(m, std::abs(c(i, j, k) + c(j, i, k)));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Jacobi identity

namespace {

using SparseRow = std::vector<std::pair<int, double>>;

std::vector<SparseRow> sparse_brackets(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<SparseRow> rows(static_cast<std::size_t>(n) * n);
  const auto& c = alg.constants();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SparseRow& r = rows[static_cast<std::size_t>(i) * n + j];
      const double* p = &c[(static_cast<std::size_t>(i) * n + j) * n];
      for (int k = 0; k < n; ++k) {
        if (p[k] != 0.0) r.emplace_back(k, p[k]);
      }
    }
  }
  return rows;
}

// [[b_i, b_j], b_k] accumulated into out.
void add_double_bracket(const std::vector<SparseRow>& rows, int n, int i, int j, int k, Vec& out) {
  for (const auto& [m, v] : rows[static_cast<std::size_t>(i) * n + j]) {
    for (const auto& [l, w] : rows[static_cast<std::size_t>(m) * n + k]) out(l) += v * w;
  }
}

}  // namespace

Vec jacobiator(const LieAlgebra& alg, int i, int j, int k) {
  const int n = alg.dim();
  Vec out = Vec::Zero(n);
  for (int m = 0; m < n; ++m) {
    const double a = alg.c(i, j, m), b = alg.c(j, k, m), d = alg.c(k, i, m);
    for (int l = 0; l < n; ++l) out(l) += a * alg.c(m, k, l) + b * alg.c(m, i, l) + d * alg.c(m, j, l);
  }
  return out;
}

JacobiReport jacobi_report(const LieAlgebra& alg) {
  JacobiReport rep;
  const int n = alg.dim();
  const double scale = alg.max_abs_constant();
  if (scale == 0.0) return rep;
  const auto rows = sparse_brackets(alg);
  Vec acc(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        acc.setZero();
        add_double_bracket(rows, n, i, j, k, acc);
        add_double_bracket(rows, n, j, k, i, acc);
        add_double_bracket(rows, n, k, i, j, acc);
        const double r = acc.norm();
        if (r > rep.absolute) {
          rep.absolute = r;
          rep.witness = {i, j, k};
        }
      }
    }
  }
  rep.residual = rep.absolute / scale;
  return rep;
}

double jacobi_residual(const LieAlgebra& alg) { return jacobi_report(alg).residual; }

// ---------------------------------------------------------------------------
// Killing form and signatures

Mat killing_form(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(alg.ad_basis(i));
  Mat b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = ads[i].cwiseProduct(ads[j].transpose()).sum();
      b(i, j) = v;
      b(j, i) = v;
    }
  }
  return b;
}

double killing_invariance_residual(const LieAlgebra& alg, const Mat& killing) {
  double m = 0.0;
  for (int z = 0; z < alg.dim(); ++z) {
    const Mat a = alg.ad_basis(z);
    const Mat r = a.transpose() * killing + killing * a;
    if (r.size()) m = std::max(m, r.cwiseAbs().maxCoeff());
  }
  const double norm = killing.size() ? killing.cwiseAbs().maxCoeff() : 0.0;
  return m / std::max(1.0, norm);
}

Signature signature(const Mat& sym, double tol) {
  Signature s;
  if (sym.rows() == 0) return s;
  if (sym.rows() != sym.cols()) throw std::invalid_argument("signature: matrix not square");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (sym + sym.transpose()), Eigen::EigenvaluesOnly);
  const Vec& ev = es.eigenvalues();
  const double thr = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > thr) {
      ++s.positive;
    } else if (ev(i) < -thr) {
      ++s.negative;
    } else {
      ++s.zero;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Constructions

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim(), nb = b.dim();
  LieAlgebra s(na + nb);
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      for (int k = 0; k < na; ++k) {
        if (a.c(i, j, k) != 0.0) s.set_constant(i, j, k, a.c(i, j, k));
      }
    }
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) {
      for (int k = 0; k < nb; ++k) {
        if (b.c(i, j, k) != 0.0) s.set_constant(na + i, na + j, na + k, b.c(i, j, k));
      }
    }
  }
  Mat g = Mat::Zero(na + nb, na + nb);
  g.topLeftCorner(na, na) = a.inner_product();
  g.bottomRightCorner(nb, nb) = b.inner_product();
  s.set_inner_product(g);
  if (!a.labels().empty() || !b.labels().empty()) {
    std::vector<std::string> labels;
    for (int i = 0; i < na; ++i) labels.push_back(a.label(i));
    for (int i = 0; i < nb; ++i) labels.push_back(b.label(i));
    s.set_labels(std::move(labels));
  }
  return s;
}

Subspace center(const LieAlgebra& alg) {
  const int n = alg.dim();
  if (n == 0) return Subspace::zero(0);
  // x in the center iff sum_i x_i c(i,j,k) = 0 for all j, k.
  Mat m(n * n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) m(j * n + k, i) = alg.c(i, j, k);
    }
  }
  return Subspace::span(nullspace(m), alg.inner_product());
}

Subspace derived_algebra(const LieAlgebra& alg) {
  const int n = alg.dim();
  Mat span(n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) span.col(i * n + j) = alg.bracket_basis(i, j);
  }
  return Subspace::span(span, alg.inner_product());
}

std::vector<int> lower_central_series(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<int> dims{n};
  if (n == 0) return dims;
  std::vector<Mat> ads;
  for (int i = 0; i < n; ++i) ads.push_back(alg.ad_basis(i));
  Mat current = Mat::Identity(n, n);
  while (true) {
    const int d = static_cast<int>(current.cols());
    if (d == 0) break;
    Mat next(n, n * d);
    for (int i = 0; i < n; ++i) next.middleCols(i * d, d) = ads[i] * current;
    Mat basis = orthonormal_range(next);
    const int nd = static_cast<int>(basis.cols());
    if (nd == d) break;
    dims.push_back(nd);
    current = basis;
  }
  return dims;
}

int nilpotency_class(const LieAlgebra& alg) {
  const auto dims = lower_central_series(alg);
  if (dims.back() != 0) return -1;
  return static_cast<int>(dims.size()) - 1;
}

Fingerprint fingerprint(const LieAlgebra& alg) {
  Fingerprint f;
  f.dim = alg.dim();
  f.killing = signature(killing_form(alg));
  f.center_dim = center(alg).dim();
  f.nilpotency_class = nilpotency_class(alg);
  return f;
}

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
  return os.str();
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "dim=" << f.dim << " killing=" << to_string(f.killing) << " center=" << f.center_dim
     << " nilpotency=" << f.nilpotency_class;
  return os.str();
}

double closure_residual(const LieAlgebra& alg, const Subspace& sub) {
  double m = 0.0;
  const Mat& b = sub.basis();
  for (int a = 0; a < sub.dim(); ++a) {
    for (int c = a + 1; c < sub.dim(); ++c) {
      m = std::max(m, sub.distance(alg.bracket(b.col(a), b.col(c))));
    }
  }
  return m;
}

double invariance_residual(const LieAlgebra& alg, const Subspace& acting, const Subspace& m) {
  double r = 0.0;
  for (int a = 0; a < acting.dim(); ++a) {
    const Mat ad = alg.ad(acting.basis().col(a));
    for (int c = 0; c < m.dim(); ++c) r = std::max(r, m.distance(ad * m.basis().col(c)));
  }
  return r;
}

LieAlgebra subalgebra(const LieAlgebra& alg, const Subspace& sub, double tol) {
  const double res = closure_residual(alg, sub);
  if (res > tol * std::max(1.0, alg.max_abs_constant())) {
    throw std::invalid_argument("subalgebra: subspace not closed under the bracket (residual " + std::to_string(res) +
                                ")");
  }
  const int d = sub.dim();
  LieAlgebra s(d);
  const Mat& b = sub.basis();
  for (int a = 0; a < d; ++a) {
    for (int c = a + 1; c < d; ++c) {
      Vec coords = sub.coordinates(alg.bracket(b.col(a), b.col(c)));
      for (int k = 0; k < d; ++k) {
        if (std::abs(coords(k)) < 1e-14) coords(k) = 0.0;
      }
      s.set_bracket(a, c, coords);
    }
  }
  return s;
}

LieAlgebra pullback(const LieAlgebra& alg, const Mat& f) {
  const int n = alg.dim();
  if (f.rows() != n || f.cols() != n) throw std::invalid_argument("pullback: map has wrong size");
  Eigen::FullPivLU<Mat> lu(f);
  if (!lu.isInvertible()) throw std::invalid_argument("pullback: map not invertible");
  LieAlgebra p(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      p.set_bracket(i, j, lu.solve(alg.bracket(f.col(i), f.col(j))));
    }
  }
  p.set_inner_product(alg.inner_product());
  p.set_labels(alg.labels());
  return p;
}

LieAlgebra dual_real_form(const LieAlgebra& alg, const std::vector<int>& block) {
  const int n = alg.dim();
  std::vector<char> in(n, 0);
  for (int i : block) {
    if (i < 0 || i >= n) throw std::out_of_range("dual_real_form: block index");
    in[i] = 1;
  }
  const double tol = 1e-12 * std::max(1.0, alg.max_abs_constant());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = std::abs(alg.c(i, j, k));
        if (v <= tol) continue;
        const int inside = in[i] + in[j];
        // [h,h] in h, [h,p] in p, [p,p] in h.
        if ((inside == 1) != static_cast<bool>(in[k])) {
          throw std::invalid_argument("dual_real_form: decomposition is not a symmetric pair");
        }
      }
    }
  }
  LieAlgebra d = alg;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(in[i] && in[j])) continue;
      for (int k = 0; k < n; ++k) {
        if (alg.c(i, j, k) != 0.0) d.set_constant(i, j, k, -alg.c(i, j, k));
      }
    }
  }
  return d;
}

}  // namespace isocoh
