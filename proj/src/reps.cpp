#include "isocoh/reps.hpp"

#include "isocoh/classical.hpp"

#include <numeric>
#include <stdexcept>

namespace isocoh {

namespace {

std::vector<int> range(int begin, int end) {
  std::vector<int> v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

// Representation of a direct sum algebra a + b on V: a acts by ra, b by rb.
Representation sum_action(const LieAlgebra& sum, const std::vector<Mat>& ra, const std::vector<Mat>& rb) {
  std::vector<Mat> mats = ra;
  mats.insert(mats.end(), rb.begin(), rb.end());
  return Representation(sum, std::move(mats));
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace

Subspace TwoBlockRep::m1() const { return Subspace::coordinate(rep.space_dim(), range(0, m1_dim)); }

Subspace TwoBlockRep::m2() const { return Subspace::coordinate(rep.space_dim(), range(m1_dim, rep.space_dim())); }

std::pair<Representation, Representation> g2_representations() {
  const CliffordModule mod = spin_module(7);
  const Representation spin7 = spin_algebra(mod);
  Vec spinor = Vec::Zero(mod.dim);
  spinor(0) = 1.0;
  const Subspace iso = isotropy_subalgebra(spin7, spinor);
  LieAlgebra g2 = subalgebra(spin7.algebra(), iso);
  const Representation vec = spin_vector_representation(mod).pulled_back(g2, iso.basis());
  const Representation spin = spin7.pulled_back(g2, iso.basis());
  return {vec, spin};
}

std::vector<SphereTransitiveRow> sphere_transitive_rows() {
  std::vector<SphereTransitiveRow> rows;
  rows.push_back({"SO(3)", "SO(3)", "SO(2)", so_standard(3), 1});
  rows.push_back({"SO(5)", "SO(5)", "SO(4)", so_standard(5), 6});
  rows.push_back({"SU(2)", "SU(2)", "SU(1)", su_standard(2), 0});
  rows.push_back({"SU(3)", "SU(3)", "SU(2)", su_standard(3), 3});
  rows.push_back({"Sp(1)", "Sp(1)", "Sp(0)", sp_standard(1), 0});
  rows.push_back({"Sp(2)", "Sp(2)", "Sp(1)", sp_standard(2), 3});
  rows.push_back({"U(2)", "U(2)", "U(1)", u_standard(2), 1});
  {
    std::vector<Mat> mats;
    for (int u = 1; u <= 3; ++u) mats.push_back(quaternion_left(quaternion_unit(u)));
    for (int u = 1; u <= 3; ++u) mats.push_back(quaternion_right(quaternion_unit(u)));
    rows.push_back({"Sp(1)Sp(1)", "Sp(1)Sp(1)", "Sp(0)Sp(1)", matrix_lie_algebra(mats), 3});
  }
  {
    std::vector<Mat> mats;
    for (int u = 1; u <= 3; ++u) mats.push_back(quaternion_left(quaternion_unit(u)));
    mats.push_back(quaternion_right(quaternion_unit(1)));
    rows.push_back({"Sp(1)U(1)", "Sp(1)U(1)", "Sp(0)U(1)", matrix_lie_algebra(mats), 1});
  }
  rows.push_back({"G2", "G2", "SU(3)", g2_representations().first, 8});
  rows.push_back({"Spin(7)", "Spin(7)", "G2", spin_algebra(spin_module(7)), 14});
  rows.push_back({"Spin(9)", "Spin(9)", "Spin(7)", spin_algebra(spin_module(9)), 21});
  return rows;
}

TwoBlockRep unitary_det_rep(int n, int k) {
  const Representation u = u_standard(n);
  std::vector<Mat> mats;
  const Mat j2 = rotation_generator(2, 0, 1);
  for (int i = 0; i < u.algebra_dim(); ++i) {
    // tr of the complex matrix is i * (trace of its imaginary block).
    const Mat& m = u.matrix(i);
    const double im_trace = m.bottomLeftCorner(n, n).trace();
    mats.push_back(block_diag(k * im_trace * j2, m));
  }
  return {"U(" + std::to_string(n) + ")", Representation(u.algebra(), std::move(mats)), 2};
}

TwoBlockRep u1_sp_weight_rep(int q, int k) {
  const Representation sp = sp_standard(q);
  const LieAlgebra alg = direct_sum(LieAlgebra(1), sp.algebra());
  const Mat j2 = rotation_generator(2, 0, 1);
  std::vector<Mat> ra{block_diag(2.0 * k * j2, right_multiplication(q, 1))};
  std::vector<Mat> rb;
  for (const Mat& m : sp.matrices()) rb.push_back(block_diag(Mat::Zero(2, 2), m));
  return {"U(1)Sp(" + std::to_string(q) + ")", sum_action(alg, ra, rb), 2};
}

TwoBlockRep clifford_isotropy_rep(int n, int q) {
  const CliffordModule mod = repeat(spin_module(n), q);
  const Representation spin = spin_algebra(mod);
  const Representation vec = spin_vector_representation(mod);
  std::vector<Mat> ra;
  for (int i = 0; i < spin.algebra_dim(); ++i) ra.push_back(block_diag(vec.matrix(i), spin.matrix(i)));
  std::string id = "Spin(" + std::to_string(n) + ")";
  if (n <= 3) {
    const Representation sp = sp_standard(q);
    const LieAlgebra alg = direct_sum(spin.algebra(), sp.algebra());
    std::vector<Mat> rb;
    for (const Mat& m : sp.matrices()) rb.push_back(block_diag(Mat::Zero(n, n), m));
    id += "Sp(" + std::to_string(q) + ")";
    return {id, sum_action(alg, ra, rb), n};
  }
  if (q != 1) throw std::invalid_argument("clifford_isotropy_rep: module count must be 1 for n > 3");
  return {id, Representation(spin.algebra(), std::move(ra)), n};
}

std::vector<TwoBlockRep> cohomogeneity_two_rows() {
  std::vector<TwoBlockRep> rows;
  rows.push_back(unitary_det_rep(3, 1));
  TwoBlockRep r2 = clifford_isotropy_rep(2, 1);
  r2.id = "U(1)Sp(1)";
  rows.push_back(r2);
  TwoBlockRep r3 = clifford_isotropy_rep(3, 1);
  r3.id = "Sp(1)Sp(1)";
  rows.push_back(r3);
  TwoBlockRep r4 = clifford_isotropy_rep(6, 1);
  r4.id = "Spin(6)";
  rows.push_back(r4);
  TwoBlockRep r5 = clifford_isotropy_rep(7, 1);
  r5.id = "Spin(7)";
  rows.push_back(r5);
  return rows;
}

TwoBlockRep product_control_rep() {
  const Representation so3 = so_standard(3);
  const LieAlgebra alg = direct_sum(so3.algebra(), so3.algebra());
  std::vector<Mat> ra, rb;
  for (const Mat& m : so3.matrices()) {
    ra.push_back(block_diag(m, Mat::Zero(3, 3)));
    rb.push_back(block_diag(Mat::Zero(3, 3), m));
  }
  return {"SO(3)xSO(3)", sum_action(alg, ra, rb), 3};
}

}  // namespace isocoh
