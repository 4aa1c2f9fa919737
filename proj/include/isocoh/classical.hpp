#pragma once

// Classical compact matrix Lie algebras and their defining real
// representations.

#include "isocoh/representation.hpp"

#include <Eigen/Dense>

namespace isocoh {

using CMat = Eigen::MatrixXcd;

/// Generator of so(n) rotating e_i towards e_j: e_i -> e_j, e_j -> -e_i.
Mat rotation_generator(int n, int i, int j);

/// Real 2n x 2n form of a complex n x n matrix, coordinates (Re z, Im z).
Mat realify(const CMat& m);

/// 4x4 matrices of left / right multiplication by a quaternion
/// q = a + b i + c j + d k on H = R^4 with basis (1, i, j, k).
Mat quaternion_left(const Eigen::Vector4d& q);
Mat quaternion_right(const Eigen::Vector4d& q);
/// Unit quaternion basis element: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
Eigen::Vector4d quaternion_unit(int u);

/// Frobenius-orthogonal basis of su(n) (norm sqrt 2 each): E_ab - E_ba,
/// i(E_ab + E_ba) for a < b, then diagonal Cartan elements.
std::vector<CMat> su_complex_basis(int n);

/// so(n) on R^n, basis rotation_generator(i, j) for i < j.
Representation so_standard(int n);
/// su(n) on C^n = R^{2n}, Frobenius-orthogonal basis.
Representation su_standard(int n);
/// u(n) on C^n: su(n) basis followed by i * Id / sqrt(n).
Representation u_standard(int n);
/// sp(n) on H^n = R^{4n}: quaternionic skew-Hermitian matrices acting by
/// left multiplication (commuting with right scalar multiplication).
Representation sp_standard(int n);

/// Matrices of right multiplication by i, j, k on H^n (block diagonal).
Mat right_multiplication(int n, int unit);

}  // namespace isocoh
