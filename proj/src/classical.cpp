#include "isocoh/classical.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace isocoh {

Mat rotation_generator(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::invalid_argument("rotation_generator: bad indices");
  Mat m = Mat::Zero(n, n);
  m(j, i) = 1.0;
  m(i, j) = -1.0;
  return m;
}

Mat realify(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  Mat r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = -m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = m.real();
  return r;
}

Eigen::Vector4d quaternion_unit(int u) {
  if (u < 0 || u > 3) throw std::out_of_range("quaternion_unit");
  Eigen::Vector4d q = Eigen::Vector4d::Zero();
  q(u) = 1.0;
  return q;
}

namespace {

// Hamilton product p q.
Eigen::Vector4d qmul(const Eigen::Vector4d& p, const Eigen::Vector4d& q) {
  return {p(0) * q(0) - p(1) * q(1) - p(2) * q(2) - p(3) * q(3),
          p(0) * q(1) + p(1) * q(0) + p(2) * q(3) - p(3) * q(2),
          p(0) * q(2) - p(1) * q(3) + p(2) * q(0) + p(3) * q(1),
          p(0) * q(3) + p(1) * q(2) - p(2) * q(1) + p(3) * q(0)};
}

}  // namespace

Mat quaternion_left(const Eigen::Vector4d& q) {
  Mat m(4, 4);
  for (int b = 0; b < 4; ++b) m.col(b) = qmul(q, quaternion_unit(b));
  return m;
}

Mat quaternion_right(const Eigen::Vector4d& q) {
  Mat m(4, 4);
  for (int b = 0; b < 4; ++b) m.col(b) = qmul(quaternion_unit(b), q);
  return m;
}

Representation so_standard(int n) {
  std::vector<Mat> mats;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) mats.push_back(rotation_generator(n, i, j));
  }
  return matrix_lie_algebra(mats);
}

std::vector<CMat> su_complex_basis(int n) {
  using C = std::complex<double>;
  std::vector<CMat> mats;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      CMat x = CMat::Zero(n, n);
      x(a, b) = 1.0;
      x(b, a) = -1.0;
      mats.push_back(x);
      CMat y = CMat::Zero(n, n);
      y(a, b) = C(0, 1);
      y(b, a) = C(0, 1);
      mats.push_back(y);
    }
  }
  // Diagonal Cartan elements i diag(1,..,1,-k,0,..) scaled to Frobenius norm sqrt(2).
  for (int k = 1; k < n; ++k) {
    CMat h = CMat::Zero(n, n);
    for (int a = 0; a < k; ++a) h(a, a) = C(0, 1);
    h(k, k) = C(0, -k);
    h *= std::sqrt(2.0 / (k * (k + 1.0)));
    mats.push_back(h);
  }
  return mats;
}

namespace {

std::vector<Mat> su_basis(int n) {
  std::vector<Mat> mats;
  for (const CMat& m : su_complex_basis(n)) mats.push_back(realify(m));
  return mats;
}

}  // namespace

Representation su_standard(int n) {
  if (n < 1) throw std::invalid_argument("su_standard: n >= 1");
  if (n == 1) return Representation(LieAlgebra(0), {}, Mat::Identity(2, 2));
  return matrix_lie_algebra(su_basis(n));
}

Representation u_standard(int n) {
  if (n < 1) throw std::invalid_argument("u_standard: n >= 1");
  auto mats = su_basis(n);
  CMat c = CMat::Identity(n, n) * std::complex<double>(0, std::sqrt(2.0 / n));
  mats.push_back(realify(c));
  return matrix_lie_algebra(mats);
}

Representation sp_standard(int n) {
  if (n < 1) throw std::invalid_argument("sp_standard: n >= 1");
  const int d = 4 * n;
  std::vector<Mat> mats;
  auto block = [&](int a, int b, const Mat& q) {
    Mat m = Mat::Zero(d, d);
    m.block(4 * a, 4 * b, 4, 4) = q;
    return m;
  };
  for (int a = 0; a < n; ++a) {
    for (int u = 1; u <= 3; ++u) mats.push_back(block(a, a, quaternion_left(quaternion_unit(u))));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Mat one = quaternion_left(quaternion_unit(0));
      mats.push_back(block(a, b, one) - block(b, a, one));
      for (int u = 1; u <= 3; ++u) {
        const Mat q = quaternion_left(quaternion_unit(u));
        // q E_ab + q E_ba is skew-Hermitian since conj(q) = -q.
        mats.push_back(block(a, b, q) + block(b, a, q));
      }
    }
  }
  return matrix_lie_algebra(mats);
}

Mat right_multiplication(int n, int unit) {
  Mat m = Mat::Zero(4 * n, 4 * n);
  const Mat r = quaternion_right(quaternion_unit(unit));
  for (int a = 0; a < n; ++a) m.block(4 * a, 4 * a, 4, 4) = r;
  return m;
}

}  // namespace isocoh
