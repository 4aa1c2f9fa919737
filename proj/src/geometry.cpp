#include "isocoh/geometry.hpp"

#include "isocoh/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace isocoh {

namespace {

Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = m(rows[r], cols[c]);
  }
  return s;
}

// Lifts m-coordinates into algebra coordinates.
Vec lift(const ReductiveSpace& s, const std::vector<int>& m, const Vec& x) {
  Vec v = Vec::Zero(s.dim());
  for (std::size_t a = 0; a < m.size(); ++a) v(m[a]) = x(a);
  return v;
}

Vec restrict_to(const Vec& v, const std::vector<int>& idx) {
  Vec r(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) r(a) = v(idx[a]);
  return r;
}

}  // namespace

InvariantMetricSpace::InvariantMetricSpace(ReductiveSpace s)
    : InvariantMetricSpace(s, std::vector<double>(s.blocks.size(), 1.0)) {}

InvariantMetricSpace::InvariantMetricSpace(ReductiveSpace s, std::vector<double> scales)
    : space(std::move(s)), block_scales(std::move(scales)) {
  if (block_scales.size() != space.blocks.size()) {
    throw std::invalid_argument("InvariantMetricSpace: one scale per block required");
  }
  for (double c : block_scales) {
    if (!(c > 0.0)) throw std::invalid_argument("InvariantMetricSpace: block scales must be positive");
  }
}

Mat InvariantMetricSpace::metric() const {
  const std::vector<int> m = space.m_indices();
  Mat g = submatrix(space.algebra.inner_product(), m, m);
  int at = 0;
  std::vector<double> scale(m.size());
  for (std::size_t b = 0; b < space.blocks.size(); ++b) {
    for (std::size_t i = 0; i < space.blocks[b].size(); ++i) scale[at++] = block_scales[b];
  }
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) g(i, j) *= std::sqrt(scale[i] * scale[j]);
  }
  return g;
}

Mat InvariantMetricSpace::frame() const {
  const Mat g = metric();
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("InvariantMetricSpace: metric not positive definite");
  const Mat lt = llt.matrixU();  // L^T
  return lt.triangularView<Eigen::Upper>().solve(Mat::Identity(g.rows(), g.cols()));
}

double InvariantMetricSpace::invariance_residual() const {
  const std::vector<int> m = space.m_indices();
  const Mat g = metric();
  double r = 0.0;
  for (int a : space.k_indices) {
    const Mat ad = submatrix(space.algebra.ad_basis(a), m, m);
    r = std::max(r, (ad.transpose() * g + g * ad).cwiseAbs().maxCoeff());
  }
  return r;
}

CurvatureTensor::CurvatureTensor(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {}

double CurvatureTensor::evaluate(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
  double s = 0.0;
  for (int a = 0; a < dim_; ++a) {
    if (x(a) == 0.0) continue;
    for (int b = 0; b < dim_; ++b) {
      if (y(b) == 0.0) continue;
      for (int c = 0; c < dim_; ++c) {
        if (z(c) == 0.0) continue;
        double inner = 0.0;
        for (int d = 0; d < dim_; ++d) inner += (*this)(a, b, c, d) * w(d);
        s += x(a) * y(b) * z(c) * inner;
      }
    }
  }
  return s;
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double CurvatureTensor::symmetry_residual() const {
  double r = 0.0;
  const auto& R = *this;
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      for (int c = 0; c < dim_; ++c) {
        for (int d = 0; d < dim_; ++d) {
          const double v = R(a, b, c, d);
          r = std::max(r, std::abs(v + R(b, a, c, d)));
          r = std::max(r, std::abs(v + R(a, b, d, c)));
          r = std::max(r, std::abs(v - R(c, d, a, b)));
          r = std::max(r, std::abs(v + R(b, c, a, d) + R(c, a, b, d)));
        }
      }
    }
  }
  return r / std::max(1.0, max_abs());
}

CurvatureTensor curvature_tensor(const InvariantMetricSpace& ms) {
  const ReductiveSpace& s = ms.space;
  const SpaceResiduals res = space_residuals(s);
  if (res.k_closure > kJacobiTol || res.block_invariance > kJacobiTol) {
    throw std::invalid_argument("curvature_tensor: decomposition is not reductive");
  }
  if (ms.invariance_residual() > kCurvatureTol * std::max(1.0, s.algebra.max_abs_constant())) {
    throw std::invalid_argument("curvature_tensor: metric is not Ad(K)-invariant");
  }
  const std::vector<int> m = s.m_indices();
  const int p = static_cast<int>(m.size());
  const Mat f = ms.frame();
  // Frame coordinates of an m-coordinate vector x: solve f y = x.
  const Mat finv = f.inverse();

  std::vector<Vec> v(p);
  for (int a = 0; a < p; ++a) v[a] = lift(s, m, f.col(a));
  // bm[a][b]: m-part of [f_a, f_b] in frame coordinates; bk[a][b]: k-part in algebra coordinates.
  std::vector<std::vector<Vec>> bm(p, std::vector<Vec>(p));
  std::vector<std::vector<Vec>> bk(p, std::vector<Vec>(p));
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      const Vec br = s.algebra.bracket(v[a], v[b]);
      bm[a][b] = finv * restrict_to(br, m);
      Vec kpart = Vec::Zero(s.dim());
      for (int i : s.k_indices) kpart(i) = br(i);
      bk[a][b] = kpart;
    }
  }
  // Levi-Civita: Lambda(X) Y = 1/2 [X,Y]_m + U(X,Y) with
  // <U(X,Y), Z> = 1/2 (<[Z,X]_m, Y> + <X, [Z,Y]_m>).
  std::vector<Mat> lambda(p, Mat::Zero(p, p));
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        lambda[a](c, b) = 0.5 * bm[a][b](c) + 0.5 * (bm[c][a](b) + bm[c][b](a));
      }
    }
  }
  auto isotropy_action = [&](const Vec& z) {
    const Mat ad = submatrix(s.algebra.ad(z), m, m);
    return Mat(finv * ad * f);
  };
  CurvatureTensor r(p);
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      Mat op = lambda[a] * lambda[b] - lambda[b] * lambda[a];
      for (int c = 0; c < p; ++c) {
        if (bm[a][b](c) != 0.0) op -= bm[a][b](c) * lambda[c];
      }
      if (bk[a][b].cwiseAbs().maxCoeff() > 0.0) op -= isotropy_action(bk[a][b]);
      for (int c = 0; c < p; ++c) {
        for (int d = 0; d < p; ++d) {
          r(a, b, c, d) = op(d, c);
          r(b, a, c, d) = -op(d, c);
        }
      }
    }
  }
  return r;
}

double sectional_curvature(const InvariantMetricSpace& ms, const Vec& x, const Vec& y) {
  const Mat g = ms.metric();
  if (x.size() != g.rows() || y.size() != g.rows()) throw std::invalid_argument("sectional_curvature: wrong length");
  const double xx = x.dot(g * x), yy = y.dot(g * y), xy = x.dot(g * y);
  if (std::abs(xx - 1.0) > kCurvatureTol || std::abs(yy - 1.0) > kCurvatureTol || std::abs(xy) > kCurvatureTol) {
    throw std::invalid_argument("sectional_curvature: plane is not orthonormal");
  }
  const Mat finv = ms.frame().inverse();
  const Vec fx = finv * x, fy = finv * y;
  return curvature_tensor(ms).evaluate(fx, fy, fy, fx);
}

std::vector<double> random_sectional_curvatures(const InvariantMetricSpace& ms, int count, std::uint64_t seed) {
  const CurvatureTensor r = curvature_tensor(ms);
  const int p = r.dim();
  if (p < 2) throw std::invalid_argument("random_sectional_curvatures: need dim m >= 2");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const Vec x = random_unit_vector(p, rng);
    Vec y = random_unit_vector(p, rng);
    y -= y.dot(x) * x;
    y.normalize();
    out.push_back(r.evaluate(x, y, y, x));
  }
  return out;
}

ReductiveSpace sphere_space(int n) {
  if (n < 1) throw std::invalid_argument("sphere_space: n >= 1");
  std::vector<Mat> mats;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      mats.push_back(rotation_generator(n + 1, i, j));
      labels.push_back("L" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  }
  const int kd = static_cast<int>(mats.size());
  for (int i = 0; i < n; ++i) {
    mats.push_back(rotation_generator(n + 1, i, n));
    labels.push_back("L" + std::to_string(i + 1) + "_" + std::to_string(n + 1));
  }
  ReductiveSpace s;
  s.id = "S^" + std::to_string(n);
  s.algebra = matrix_lie_algebra(mats).algebra();
  s.algebra.set_labels(labels);
  s.k_indices.resize(kd);
  std::iota(s.k_indices.begin(), s.k_indices.end(), 0);
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), kd);
  s.blocks = {m};
  s.flags.push_back("symmetric");
  validate_space(s);
  return s;
}

namespace {

// max |[x, y]| over basis pairs of the subspace spanned by the columns (algebra coordinates).
double abelian_residual(const LieAlgebra& g, const Mat& cols) {
  double r = 0.0;
  for (int a = 0; a < cols.cols(); ++a) {
    for (int b = a + 1; b < cols.cols(); ++b) r = std::max(r, g.bracket(cols.col(a), cols.col(b)).norm());
  }
  return r;
}

// Largest component of [k, m'] outside m'.
double ideal_residual(const ReductiveSpace& s, const Mat& cols) {
  const Subspace sub = Subspace::span(cols);
  double r = abelian_residual(s.algebra, cols);
  for (int z : s.k_indices) {
    const Mat ad = s.algebra.ad_basis(z);
    for (int a = 0; a < cols.cols(); ++a) r = std::max(r, sub.distance(ad * cols.col(a)));
  }
  return r;
}

}  // namespace

FlatnessReport flatness_report(const ReductiveSpace& space, double tol) {
  FlatnessReport rep;
  const LieAlgebra& g = space.algebra;
  const int n = space.dim();
  const std::vector<int> m = space.m_indices();
  Mat cols = Mat::Zero(n, m.size());
  for (std::size_t a = 0; a < m.size(); ++a) cols(m[a], a) = 1.0;
  const double scale = std::max(1.0, g.max_abs_constant());
  rep.ideal_residual = ideal_residual(space, cols);

  if (rep.ideal_residual > tol * scale && space.blocks.size() == 2 && space.k_dim() > 0) {
    // Shift m1 by phi: m1 -> k so that [x + phi x, m2] = 0 and the shifted
    // complement is k-invariant. Unknown phi(a, i) is the k_a component of phi(x_i).
    const auto& m1 = space.blocks[0];
    const auto& m2 = space.blocks[1];
    const int kd = space.k_dim();
    const int d1 = static_cast<int>(m1.size());
    AffineSolver solver(kd * d1);
    for (int i = 0; i < d1; ++i) {
      for (int w : m2) {
        Mat a = Mat::Zero(n, kd * d1);
        for (int z = 0; z < kd; ++z) a.col(z * d1 + i) = g.bracket_basis(space.k_indices[z], w);
        solver.add(a, g.bracket_basis(m1[i], w));
      }
      // [Z, x_i + phi x_i] = sum_j c_j (x_j + phi x_j) where [Z, x_i] = sum_j c_j x_j.
      for (int z = 0; z < kd; ++z) {
        const Vec zx = g.bracket_basis(space.k_indices[z], m1[i]);
        Mat a = Mat::Zero(n, kd * d1);
        for (int y = 0; y < kd; ++y) {
          a.col(y * d1 + i) += g.bracket_basis(space.k_indices[z], space.k_indices[y]);
          for (int j = 0; j < d1; ++j) {
            const double c = zx(m1[j]);
            if (c != 0.0) a(space.k_indices[y], y * d1 + j) -= c;
          }
        }
        solver.add(a, Vec::Zero(n));
      }
    }
    if (solver.consistent()) {
      const Vec phi = solver.particular();
      Mat shifted = cols;
      for (int i = 0; i < d1; ++i) {
        for (int z = 0; z < kd; ++z) shifted(space.k_indices[z], i) = phi(z * d1 + i);
      }
      const double r = ideal_residual(space, shifted);
      if (r < rep.ideal_residual) {
        rep.ideal_residual = r;
        rep.shifted = true;
      }
    }
  }
  rep.curvature_max = curvature_tensor(InvariantMetricSpace(space)).max_abs();
  rep.flat = rep.ideal_residual <= tol * scale && rep.curvature_max <= tol * scale;
  return rep;
}

bool verify_flatness(const ReductiveSpace& space, double tol) { return flatness_report(space, tol).flat; }

}  // namespace isocoh
