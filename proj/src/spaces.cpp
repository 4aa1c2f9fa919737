#include "isocoh/spaces.hpp"

#include "isocoh/classical.hpp"
#include "isocoh/clifford.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <regex>
#include <sstream>

namespace isocoh {

namespace {

std::vector<int> range(int begin, int end) {
  std::vector<int> v(std::max(0, end - begin));
  std::iota(v.begin(), v.end(), begin);
  return v;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = m(rows[r], cols[c]);
  }
  return s;
}

std::string num(int v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// ReductiveSpace

int ReductiveSpace::m_dim() const {
  int d = 0;
  for (const auto& b : blocks) d += static_cast<int>(b.size());
  return d;
}

std::vector<int> ReductiveSpace::m_indices() const {
  std::vector<int> r;
  for (const auto& b : blocks) r.insert(r.end(), b.begin(), b.end());
  return r;
}

Subspace ReductiveSpace::isotropy() const { return Subspace::coordinate(dim(), k_indices); }

Subspace ReductiveSpace::block(int b) const { return Subspace::coordinate(dim(), blocks.at(b)); }

Subspace ReductiveSpace::m() const { return Subspace::coordinate(dim(), m_indices()); }

bool ReductiveSpace::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

SpaceResiduals space_residuals(const ReductiveSpace& space) {
  SpaceResiduals r;
  const LieAlgebra& g = space.algebra;
  r.jacobi = jacobi_residual(g);
  const double scale = std::max(1.0, g.max_abs_constant());
  std::vector<char> in_k(space.dim(), 0);
  for (int i : space.k_indices) in_k[i] = 1;
  for (int a : space.k_indices) {
    for (int b : space.k_indices) {
      for (int c = 0; c < space.dim(); ++c) {
        if (!in_k[c]) r.k_closure = std::max(r.k_closure, std::abs(g.c(a, b, c)) / scale);
      }
    }
  }
  for (const auto& blk : space.blocks) {
    std::vector<char> in_b(space.dim(), 0);
    for (int i : blk) in_b[i] = 1;
    for (int a : space.k_indices) {
      for (int x : blk) {
        for (int c = 0; c < space.dim(); ++c) {
          if (!in_b[c]) r.block_invariance = std::max(r.block_invariance, std::abs(g.c(a, x, c)) / scale);
        }
      }
    }
  }
  // Pieces k, m1, m2 must be mutually orthogonal.
  std::vector<std::vector<int>> pieces{space.k_indices};
  for (const auto& b : space.blocks) pieces.push_back(b);
  const Mat& ip = g.inner_product();
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t q = p + 1; q < pieces.size(); ++q) {
      for (int i : pieces[p]) {
        for (int j : pieces[q]) r.orthogonality = std::max(r.orthogonality, std::abs(ip(i, j)));
      }
    }
  }
  return r;
}

void validate_space(const ReductiveSpace& space, double tol) {
  const JacobiReport jr = jacobi_report(space.algebra);
  if (jr.residual > tol) {
    std::ostringstream os;
    os << space.id << ": Jacobi identity fails (residual " << jr.residual << ") at basis triple ("
       << space.algebra.label(jr.witness[0]) << ", " << space.algebra.label(jr.witness[1]) << ", "
       << space.algebra.label(jr.witness[2]) << ")";
    throw ValidationError(os.str(), jr.witness, jr.residual);
  }
  const SpaceResiduals r = space_residuals(space);
  if (r.k_closure > tol) throw ValidationError(space.id + ": k is not a subalgebra", {-1, -1, -1}, r.k_closure);
  if (r.block_invariance > tol) {
    throw ValidationError(space.id + ": blocks are not k-invariant", {-1, -1, -1}, r.block_invariance);
  }
  if (r.orthogonality > tol) {
    throw ValidationError(space.id + ": decomposition is not orthogonal", {-1, -1, -1}, r.orthogonality);
  }
}

TwoBlockRep isotropy_representation(const ReductiveSpace& space) {
  const LieAlgebra& g = space.algebra;
  const int kd = space.k_dim();
  LieAlgebra k(kd);
  for (int a = 0; a < kd; ++a) {
    for (int b = a + 1; b < kd; ++b) {
      for (int c = 0; c < kd; ++c) {
        const double v = g.c(space.k_indices[a], space.k_indices[b], space.k_indices[c]);
        if (v != 0.0) k.set_constant(a, b, c, v);
      }
    }
  }
  k.set_inner_product(submatrix(g.inner_product(), space.k_indices, space.k_indices));
  const std::vector<int> m = space.m_indices();
  std::vector<Mat> mats;
  for (int a : space.k_indices) mats.push_back(submatrix(g.ad_basis(a), m, m));
  const int m1 = space.blocks.empty() ? 0 : space.block_dim(0);
  return {space.id, Representation(k, std::move(mats), submatrix(g.inner_product(), m, m)), m1};
}

// ---------------------------------------------------------------------------
// Clifford family

CliffordLayout clifford_layout(int n, int copies) {
  if (n != 2 && n != 3 && n != 6 && n != 7) throw std::invalid_argument("clifford_layout: n must be 2, 3, 6 or 7");
  if (copies < 1) throw std::invalid_argument("clifford_layout: copies >= 1");
  if (n > 3 && copies != 1) throw std::invalid_argument("clifford_layout: module count must be 1 for n = 6, 7");
  CliffordLayout l;
  l.n = n;
  l.module_dim = spin_module(n).dim * copies;
  int at = 0;
  l.k0 = range(at, at + n * (n - 1) / 2);
  at += static_cast<int>(l.k0.size());
  const int k1 = n <= 3 ? copies * (2 * copies + 1) : 0;
  l.k1 = range(at, at + k1);
  at += k1;
  l.m1 = range(at, at + n);
  at += n;
  l.m2 = range(at, at + l.module_dim);
  return l;
}

LieAlgebra clifford_algebra_raw(const CliffordSpaceSpec& spec) {
  const CliffordLayout lay = clifford_layout(spec.n, spec.copies);
  const int n = spec.n;
  const CliffordModule mod = repeat(spin_module(n), spec.copies);
  const auto pairs = spin_pairs(n);
  const int dim = static_cast<int>(lay.k0.size() + lay.k1.size() + lay.m1.size() + lay.m2.size());
  LieAlgebra g(dim);

  std::map<std::uint32_t, int> bivector_index;
  std::vector<CliffordElement> biv;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    biv.push_back(CliffordElement::blade(n, Blade{{i + 1, j + 1}, 1.0}));
    bivector_index[(1u << i) | (1u << j)] = lay.k0[p];
  }
  auto commutator = [](const CliffordElement& a, const CliffordElement& b) { return a * b - b * a; };

  // k0 = span of e_i e_j under the Clifford commutator.
  for (std::size_t p = 0; p < biv.size(); ++p) {
    for (std::size_t r = p + 1; r < biv.size(); ++r) {
      const CliffordElement br = commutator(biv[p], biv[r]);
      for (const auto& [mask, v] : br.terms()) {
        if (v != 0.0) g.set_constant(lay.k0[p], lay.k0[r], bivector_index.at(mask), v);
      }
    }
    for (int k = 0; k < n; ++k) {
      const CliffordElement ek = CliffordElement::generator(n, k + 1);
      const CliffordElement br = commutator(biv[p], ek);
      for (const auto& [mask, v] : br.terms()) {
        if (v == 0.0) continue;
        const int l = std::countr_zero(mask);
        g.set_constant(lay.k0[p], lay.m1[k], lay.m1[l], v);
      }
    }
    const Mat act = mod.gammas[pairs[p].first] * mod.gammas[pairs[p].second];
    for (int a = 0; a < mod.dim; ++a) {
      for (int b = 0; b < mod.dim; ++b) {
        if (act(b, a) != 0.0) g.set_constant(lay.k0[p], lay.m2[a], lay.m2[b], act(b, a));
      }
    }
  }

  // k1 = sp(q) acting from the left, commuting with the right-multiplication gammas.
  if (!lay.k1.empty()) {
    const Representation sp = sp_standard(spec.copies);
    const LieAlgebra& s = sp.algebra();
    for (int a = 0; a < s.dim(); ++a) {
      for (int b = a + 1; b < s.dim(); ++b) {
        for (int c = 0; c < s.dim(); ++c) {
          if (s.c(a, b, c) != 0.0) g.set_constant(lay.k1[a], lay.k1[b], lay.k1[c], s.c(a, b, c));
        }
      }
      const Mat& m = sp.matrix(a);
      for (int x = 0; x < mod.dim; ++x) {
        for (int y = 0; y < mod.dim; ++y) {
          if (m(y, x) != 0.0) g.set_constant(lay.k1[a], lay.m2[x], lay.m2[y], m(y, x));
        }
      }
    }
  }

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    if (spec.lambda != 0.0) g.set_constant(lay.m1[i], lay.m1[j], lay.k0[p], spec.lambda);
  }
  if (spec.mu != 0.0) {
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < mod.dim; ++a) {
        for (int b = 0; b < mod.dim; ++b) {
          const double v = mod.gammas[i](b, a);
          if (v != 0.0) g.set_constant(lay.m1[i], lay.m2[a], lay.m2[b], spec.mu * v);
        }
      }
    }
  }
  if (spec.mode == M2Mode::Heisenberg) {
    if (spec.mu != 0.0) throw std::invalid_argument("clifford_algebra_raw: Heisenberg mode requires mu = 0");
    for (int a = 0; a < mod.dim; ++a) {
      for (int b = a + 1; b < mod.dim; ++b) {
        for (int i = 0; i < n; ++i) {
          const double v = spec.kappa * mod.gammas[i](b, a);
          if (v != 0.0) g.set_constant(lay.m2[a], lay.m2[b], lay.m1[i], v);
        }
      }
    }
  }

  std::vector<std::string> labels;
  for (const auto& [i, j] : pairs) labels.push_back("e" + num(i + 1) + "e" + num(j + 1));
  for (std::size_t a = 0; a < lay.k1.size(); ++a) labels.push_back("sp" + num(static_cast<int>(a) + 1));
  for (int i = 0; i < n; ++i) labels.push_back("e" + num(i + 1));
  for (int a = 0; a < mod.dim; ++a) labels.push_back("w" + num(a + 1));
  g.set_labels(std::move(labels));
  return g;
}

CompletionProblem clifford_completion_problem(const CliffordSpaceSpec& spec) {
  CliffordSpaceSpec zero = spec;
  zero.mode = M2Mode::Zero;
  const CliffordLayout lay = clifford_layout(spec.n, spec.copies);
  CompletionProblem p;
  p.skeleton = clifford_algebra_raw(zero);
  p.unknown = lay.m2;
  p.target = Subspace::coordinate(p.skeleton.dim(), concat(concat(lay.k0, lay.k1), lay.m1));
  return p;
}

namespace {

std::vector<Vec> parameter_grid(int d) {
  std::vector<Vec> grid;
  if (d == 0) {
    grid.emplace_back(Vec(0));
  } else if (d == 1) {
    for (double t : {1.0, -1.0, 0.5, -0.5, 2.0, -2.0}) grid.emplace_back(Vec::Constant(1, t));
  } else if (d == 2) {
    for (int k = 0; k < 16; ++k) {
      const double a = 2.0 * std::numbers::pi * k / 16.0;
      Vec v(2);
      v << std::cos(a), std::sin(a);
      grid.push_back(v);
    }
  } else if (d == 3) {
    // Fibonacci sphere.
    const int count = 64;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(1.0 - z * z);
      Vec v(3);
      v << r * std::cos(golden * k), r * std::sin(golden * k), z;
      grid.push_back(v);
    }
  } else {
    throw std::invalid_argument("select_completion: completion spaces of dimension > 3 are not supported");
  }
  return grid;
}

}  // namespace

Vec select_completion(const CompletionSolution& sol, const std::string& selector) {
  if (sol.empty()) throw std::invalid_argument("select_completion: no completion exists");
  if (selector == "abelian") {
    if (sol.particular().cwiseAbs().maxCoeff() > kSubspaceTol) {
      throw std::invalid_argument("select_completion: the zero bracket is not a completion");
    }
    return Vec::Zero(sol.unknowns());
  }
  std::optional<Signature> wanted;
  static const std::regex sig_re(R"(signature\((\d+),\s*(\d+)\))");
  std::smatch m;
  if (selector == "negative-definite") {
    wanted.reset();
  } else if (std::regex_match(selector, m, sig_re)) {
    wanted = Signature{std::stoi(m[1]), std::stoi(m[2]), 0};
  } else {
    throw std::invalid_argument("select_completion: unknown selector '" + selector + "'");
  }
  // Homogeneous directions scaled so their largest entry is 1.
  Mat h = sol.homogeneous();
  for (int c = 0; c < h.cols(); ++c) {
    const double s = h.col(c).cwiseAbs().maxCoeff();
    if (s > 0.0) h.col(c) /= s;
  }
  for (const Vec& t : parameter_grid(sol.dimension())) {
    const Vec y = sol.particular() + h * t;
    const LieAlgebra g = sol.assemble(y);
    const Signature s = signature(killing_form(g));
    const bool ok = wanted ? (s.positive == wanted->positive && s.negative == wanted->negative && s.zero == 0)
                           : (s.negative == g.dim());
    if (ok) return y;
  }
  throw std::invalid_argument("select_completion: no grid point matches selector '" + selector + "'");
}

ReductiveSpace build_clifford_space(const CliffordSpaceSpec& spec) {
  const CliffordLayout lay = clifford_layout(spec.n, spec.copies);
  ReductiveSpace s;
  s.id = "Clifford(n=" + num(spec.n) + ")";
  if (spec.mode == M2Mode::Completed) {
    const CompletionProblem p = clifford_completion_problem(spec);
    const CompletionSolution sol = complete_bracket(p);
    if (sol.empty()) {
      const JacobiReport jr = jacobi_report(p.skeleton);
      throw ValidationError("Clifford space: no bracket on m2 satisfies the Jacobi identity", jr.witness,
                            jr.residual);
    }
    s.algebra = sol.assemble(select_completion(sol, spec.selector));
  } else {
    s.algebra = clifford_algebra_raw(spec);
  }
  s.k_indices = concat(lay.k0, lay.k1);
  s.blocks = {lay.m1, lay.m2};
  // -1 in Spin(n) acts trivially on k + m1 and by -1 on m2.
  Mat minus = Mat::Identity(s.dim(), s.dim());
  for (int i : lay.m2) minus(i, i) = -1.0;
  s.extra_kernel_elements.push_back(minus);
  validate_space(s);
  return s;
}

// ---------------------------------------------------------------------------
// Heisenberg

ReductiveSpace build_heisenberg(const HeisenbergSpec& spec) {
  if (spec.kappa == 0.0) throw std::invalid_argument("build_heisenberg: kappa = 0 is the flat abelian case");
  if (spec.copies < 1) throw std::invalid_argument("build_heisenberg: copies >= 1");
  ReductiveSpace s;
  if (spec.center_dim == 1) {
    const int q = spec.copies;
    const Representation u = u_standard(q);
    const int kd = u.algebra_dim();
    const int md = 2 * q;
    LieAlgebra g(kd + 1 + md);
    const LieAlgebra& ua = u.algebra();
    for (int a = 0; a < kd; ++a) {
      for (int b = a + 1; b < kd; ++b) {
        for (int c = 0; c < kd; ++c) {
          if (ua.c(a, b, c) != 0.0) g.set_constant(a, b, c, ua.c(a, b, c));
        }
      }
      for (int x = 0; x < md; ++x) {
        for (int y = 0; y < md; ++y) {
          const double v = u.matrix(a)(y, x);
          if (v != 0.0) g.set_constant(a, kd + 1 + x, kd + 1 + y, v);
        }
      }
    }
    const Mat j0 = realify(CMat::Identity(q, q) * std::complex<double>(0, 1));
    for (int a = 0; a < md; ++a) {
      for (int b = a + 1; b < md; ++b) {
        if (j0(b, a) != 0.0) g.set_constant(kd + 1 + a, kd + 1 + b, kd, spec.kappa * j0(b, a));
      }
    }
    std::vector<std::string> labels;
    for (int a = 0; a < kd; ++a) labels.push_back("u" + num(a + 1));
    labels.push_back("z1");
    for (int a = 0; a < md; ++a) labels.push_back("w" + num(a + 1));
    g.set_labels(std::move(labels));
    s.algebra = std::move(g);
    s.k_indices = range(0, kd);
    s.blocks = {{kd}, range(kd + 1, kd + 1 + md)};
  } else if (spec.center_dim == 2 || spec.center_dim == 3 || spec.center_dim == 6 || spec.center_dim == 7) {
    CliffordSpaceSpec c;
    c.n = spec.center_dim;
    c.copies = spec.copies;
    c.mode = M2Mode::Heisenberg;
    c.kappa = spec.kappa;
    s = build_clifford_space(c);
    s.extra_kernel_elements.clear();
  } else {
    throw std::invalid_argument("build_heisenberg: center dimension must be 1, 2, 3, 6 or 7");
  }
  s.id = "N(" + num(spec.center_dim) + "," + num(spec.copies) + ")";
  s.flags.push_back("heisenberg");
  validate_space(s);
  return s;
}

ReductiveSpace normalize_heisenberg(const ReductiveSpace& space, double kappa) {
  if (kappa == 0.0) throw std::invalid_argument("normalize_heisenberg: kappa = 0");
  const double rho = std::sqrt(std::abs(kappa));
  const double eps = kappa > 0 ? 1.0 : -1.0;
  Mat f = Mat::Identity(space.dim(), space.dim());
  for (int i : space.blocks.at(0)) f(i, i) = eps;
  for (int i : space.blocks.at(1)) f(i, i) = 1.0 / rho;
  ReductiveSpace out = space;
  out.algebra = pullback(space.algebra, f);
  out.algebra.set_inner_product(Mat::Identity(space.dim(), space.dim()));
  return out;
}

std::vector<Mat> heisenberg_j_maps(const ReductiveSpace& space) {
  const auto& z = space.blocks.at(0);
  const auto& w = space.blocks.at(1);
  const int d = static_cast<int>(w.size());
  std::vector<Mat> maps;
  for (int zi : z) {
    Mat j(d, d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        // <J_Z w_a, w_b> = <Z, [w_a, w_b]>.
        double v = 0.0;
        for (int zk : z) v += space.algebra.inner_product()(zi, zk) * space.algebra.c(w[a], w[b], zk);
        j(b, a) = v;
      }
    }
    maps.push_back(j);
  }
  return maps;
}

double j_anticommutation_residual(const std::vector<Mat>& j) {
  double r = 0.0;
  for (std::size_t a = 0; a < j.size(); ++a) {
    for (std::size_t b = a; b < j.size(); ++b) {
      Mat m = j[a] * j[b] + j[b] * j[a];
      if (a == b) m += 2.0 * Mat::Identity(m.rows(), m.cols());
      r = std::max(r, m.cwiseAbs().maxCoeff());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Trivial-submodule branch

namespace {

// su(n+1) = su(n) + R t + C^n realized as complex matrices.
ReductiveSpace su_compact(int n) {
  if (n < 2) throw std::invalid_argument("trivial-module branch: n >= 2");
  const int N = n + 1;
  std::vector<Mat> mats;
  for (const CMat& x : su_complex_basis(n)) {
    CMat e = CMat::Zero(N, N);
    e.topLeftCorner(n, n) = x;
    mats.push_back(realify(e));
  }
  const int kd = static_cast<int>(mats.size());
  CMat t = CMat::Zero(N, N);
  for (int a = 0; a < n; ++a) t(a, a) = std::complex<double>(0, 1);
  t(n, n) = std::complex<double>(0, -n);
  t *= std::sqrt(2.0 / (n * (n + 1.0)));
  mats.push_back(realify(t));
  for (int a = 0; a < n; ++a) {
    CMat x = CMat::Zero(N, N);
    x(a, n) = 1.0;
    x(n, a) = -1.0;
    mats.push_back(realify(x));
    CMat y = CMat::Zero(N, N);
    y(a, n) = std::complex<double>(0, 1);
    y(n, a) = std::complex<double>(0, 1);
    mats.push_back(realify(y));
  }
  ReductiveSpace s;
  s.algebra = matrix_lie_algebra(mats).algebra();
  std::vector<std::string> labels;
  for (int a = 0; a < kd; ++a) labels.push_back("k" + num(a + 1));
  labels.push_back("t");
  for (int a = 0; a < 2 * n; ++a) labels.push_back("w" + num(a + 1));
  s.algebra.set_labels(std::move(labels));
  s.k_indices = range(0, kd);
  s.blocks = {{kd}, range(kd + 1, kd + 1 + 2 * n)};
  s.id = "SU(" + num(N) + ")/SU(" + num(n) + ")";
  return s;
}

ReductiveSpace euclidean_screw(int n) {
  if (n < 1) throw std::invalid_argument("euclidean_screw: n >= 1");
  const Representation u = u_standard(n);
  const int kd = u.algebra_dim();
  const int md = 2 * n;
  LieAlgebra g(kd + 1 + md);
  const LieAlgebra& ua = u.algebra();
  for (int a = 0; a < kd; ++a) {
    for (int b = a + 1; b < kd; ++b) {
      for (int c = 0; c < kd; ++c) {
        if (ua.c(a, b, c) != 0.0) g.set_constant(a, b, c, ua.c(a, b, c));
      }
    }
    for (int x = 0; x < md; ++x) {
      for (int y = 0; y < md; ++y) {
        const double v = u.matrix(a)(y, x);
        if (v != 0.0) g.set_constant(a, kd + 1 + x, kd + 1 + y, v);
      }
    }
  }
  const Mat j0 = realify(CMat::Identity(n, n) * std::complex<double>(0, 1));
  for (int x = 0; x < md; ++x) {
    for (int y = 0; y < md; ++y) {
      if (j0(y, x) != 0.0) g.set_constant(kd, kd + 1 + x, kd + 1 + y, j0(y, x));
    }
  }
  std::vector<std::string> labels;
  for (int a = 0; a < kd; ++a) labels.push_back("u" + num(a + 1));
  labels.push_back("t");
  for (int a = 0; a < md; ++a) labels.push_back("w" + num(a + 1));
  g.set_labels(std::move(labels));
  ReductiveSpace s;
  s.algebra = std::move(g);
  s.k_indices = range(0, kd);
  s.blocks = {{kd}, range(kd + 1, kd + 1 + md)};
  s.id = "E(" + num(n) + ")screw";
  s.flags.push_back("flat");
  return s;
}

}  // namespace

ReductiveSpace build_trivial_module_space(TrivialBranch branch, int n) {
  ReductiveSpace s;
  switch (branch) {
    case TrivialBranch::SuCompact:
      s = su_compact(n);
      break;
    case TrivialBranch::SuNoncompact: {
      s = su_compact(n);
      s.algebra = dual_real_form(s.algebra, s.blocks[1]);
      s.id = "SU(" + num(n) + ",1)/SU(" + num(n) + ")";
      break;
    }
    case TrivialBranch::Heis:
      return build_heisenberg({1, n, 1.0});
    case TrivialBranch::EuclideanScrew:
      s = euclidean_screw(n);
      break;
  }
  validate_space(s);
  return s;
}

// ---------------------------------------------------------------------------
// Semidirect hyperbolic models

Mat hyperbolic_derivation(const SemidirectHyperbolicSpec& spec) {
  const int f = spec.field_dim;
  const int l = spec.copies;
  if (f != 1 && f != 2 && f != 4) throw std::invalid_argument("hyperbolic: field dimension must be 1, 2 or 4");
  if (l < 1) throw std::invalid_argument("hyperbolic: copies >= 1");
  Mat d = spec.rate * Mat::Identity(f * l, f * l);
  if (spec.rotation != 0.0) {
    if (f == 1) throw std::invalid_argument("hyperbolic: no rotation part over R");
    const Mat omega =
        f == 2 ? realify(CMat::Identity(l, l) * std::complex<double>(0, 1)) : right_multiplication(l, 1);
    d += spec.rotation * omega;
  }
  return d;
}

ReductiveSpace build_semidirect_hyperbolic(const SemidirectHyperbolicSpec& spec) {
  const Mat d = hyperbolic_derivation(spec);
  const int f = spec.field_dim;
  const int l = spec.copies;
  Representation k;
  if (f == 1) {
    k = l >= 2 ? so_standard(l) : Representation(LieAlgebra(0), {}, Mat::Identity(1, 1));
  } else if (f == 2) {
    k = u_standard(l);
  } else {
    k = sp_standard(l);
  }
  const int kd = k.algebra_dim();
  const int md = f * l;
  LieAlgebra g(kd + 1 + md);
  const LieAlgebra& ka = k.algebra();
  for (int a = 0; a < kd; ++a) {
    for (int b = a + 1; b < kd; ++b) {
      for (int c = 0; c < kd; ++c) {
        if (ka.c(a, b, c) != 0.0) g.set_constant(a, b, c, ka.c(a, b, c));
      }
    }
    for (int x = 0; x < md; ++x) {
      for (int y = 0; y < md; ++y) {
        const double v = k.matrix(a)(y, x);
        if (v != 0.0) g.set_constant(a, kd + 1 + x, kd + 1 + y, v);
      }
    }
  }
  for (int x = 0; x < md; ++x) {
    for (int y = 0; y < md; ++y) {
      if (d(y, x) != 0.0) g.set_constant(kd, kd + 1 + x, kd + 1 + y, d(y, x));
    }
  }
  std::vector<std::string> labels;
  for (int a = 0; a < kd; ++a) labels.push_back("k" + num(a + 1));
  labels.push_back("xi");
  for (int a = 0; a < md; ++a) labels.push_back("w" + num(a + 1));
  g.set_labels(std::move(labels));
  ReductiveSpace s;
  s.algebra = std::move(g);
  s.k_indices = range(0, kd);
  s.blocks = {{kd}, range(kd + 1, kd + 1 + md)};
  static const char* field[] = {"", "R", "C", "", "H"};
  s.id = "Rx" + std::string(field[f]) + (l > 1 ? "^" + num(l) : "");
  s.flags.push_back("hyperbolic");
  validate_space(s);
  return s;
}

std::pair<double, Vec> hyperbolic_group_multiply(const SemidirectHyperbolicSpec& spec, double t, const Vec& x,
                                                 double s, const Vec& y) {
  const Mat d = hyperbolic_derivation(spec);
  if (x.size() != d.rows() || y.size() != d.rows()) throw std::invalid_argument("hyperbolic: vector length");
  const Mat e = (t * d).exp();
  return {t + s, x + e * y};
}

// ---------------------------------------------------------------------------
// g1 = k + m1

double g1_closure_residual(const ReductiveSpace& space) {
  if (space.blocks.size() < 2) return 0.0;
  double r = 0.0;
  const auto& m1 = space.blocks[0];
  for (std::size_t a = 0; a < m1.size(); ++a) {
    for (std::size_t b = a + 1; b < m1.size(); ++b) {
      double sq = 0.0;
      for (int w : space.blocks[1]) sq += std::pow(space.algebra.c(m1[a], m1[b], w), 2);
      r = std::max(r, std::sqrt(sq));
    }
  }
  return r;
}

G1Result build_g1(const ReductiveSpace& space, double tol) {
  if (space.blocks.size() != 2) throw std::invalid_argument("build_g1: need exactly two blocks m1, m2");
  const TwoBlockRep iso = isotropy_representation(space);
  const Representation on_m1 = iso.on_m1();
  const Representation on_m2 = iso.on_m2();
  const Subspace n1 = kernel_ideal(on_m1);
  Subspace fix = fixed_subspace(on_m2, n1);

  const auto& m1 = space.blocks[0];
  const auto& m2 = space.blocks[1];
  const auto k_and_m1 = concat(space.k_indices, m1);
  for (const Mat& e : space.extra_kernel_elements) {
    // e must be an automorphism fixing k + m1 pointwise and preserving m2.
    const LieAlgebra& g = space.algebra;
    double auto_res = 0.0;
    for (int i = 0; i < g.dim(); ++i) {
      for (int j = i + 1; j < g.dim(); ++j) {
        auto_res = std::max(auto_res,
                            (e * g.bracket_basis(i, j) - g.bracket(e.col(i), e.col(j))).cwiseAbs().maxCoeff());
      }
    }
    double fix_res = 0.0;
    for (int i : k_and_m1) {
      Vec ei = Vec::Zero(g.dim());
      ei(i) = 1.0;
      fix_res = std::max(fix_res, (e.col(i) - ei).cwiseAbs().maxCoeff());
    }
    if (auto_res > tol || fix_res > tol || submatrix(e, k_and_m1, m2).cwiseAbs().maxCoeff() > tol) {
      throw std::invalid_argument("build_g1: declared kernel element is not an automorphism acting trivially on g1");
    }
    const Mat on = submatrix(e, m2, m2) - Mat::Identity(m2.size(), m2.size());
    fix = fix.intersection(Subspace::span(nullspace(on)));
  }
  if (fix.dim() > 0) {
    Vec witness = Vec::Zero(space.dim());
    for (std::size_t a = 0; a < m2.size(); ++a) witness(m2[a]) = fix.basis()(a, 0);
    throw G1HypothesisError(space.id + ": the kernel of the action on m1 fixes vectors in m2", witness);
  }
  G1Result r;
  r.kernel_dim = n1.dim();
  r.closure_residual = g1_closure_residual(space);
  const double scale = std::max(1.0, space.algebra.max_abs_constant());
  if (r.closure_residual > tol * scale) {
    throw ValidationError(space.id + ": k + m1 is not a subalgebra", {-1, -1, -1}, r.closure_residual);
  }
  r.algebra = subalgebra(space.algebra, Subspace::coordinate(space.dim(), k_and_m1));
  return r;
}

ProjectedActionReport projected_action_isometry_test(const ReductiveSpace& space, double tol) {
  ProjectedActionReport r;
  if (space.blocks.size() < 2) {
    r.isometric = true;
    return r;
  }
  const auto& m2 = space.blocks[1];
  const Mat g2 = submatrix(space.algebra.inner_product(), m2, m2);
  for (int xi : concat(space.k_indices, space.blocks[0])) {
    const Mat a = submatrix(space.algebra.ad_basis(xi), m2, m2);
    const Mat sym = a.transpose() * g2 + g2 * a;
    r.max_symmetric_norm = std::max(r.max_symmetric_norm, sym.cwiseAbs().maxCoeff());
  }
  r.isometric = r.max_symmetric_norm <= tol * std::max(1.0, space.algebra.max_abs_constant());
  return r;
}

EigenspaceReport ad_eigenspace_decomposition(const ReductiveSpace& space, const Vec& xi) {
  const LieAlgebra& g = space.algebra;
  const Mat ad = g.ad(xi);
  Eigen::EigenSolver<Mat> es(ad);
  const Eigen::VectorXcd ev = es.eigenvalues();
  const Eigen::MatrixXcd vecs = es.eigenvectors();
  const int n = g.dim();
  EigenspaceReport rep;
  double emax = 1.0;
  for (int i = 0; i < n; ++i) emax = std::max(emax, std::abs(ev(i)));
  const double gtol = 1e-8 * emax;

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(vecs);
  lu.setThreshold(1e-8);
  double resid = 0.0;
  if (lu.rank() < n) {
    resid = 1.0;
  } else {
    resid = (ad.cast<std::complex<double>>() * vecs - vecs * ev.asDiagonal()).cwiseAbs().maxCoeff();
  }
  rep.diagonalization_residual = resid;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ev(a).real() < ev(b).real(); });
  std::vector<std::vector<int>> groups;
  for (int i : order) {
    if (!groups.empty() && std::abs(ev(groups.back().front()).real() - ev(i).real()) <= gtol) {
      groups.back().push_back(i);
    } else {
      groups.push_back({i});
    }
  }
  const Subspace g1 = Subspace::coordinate(n, concat(space.k_indices, space.blocks.empty() ? std::vector<int>{}
                                                                                            : space.blocks[0]));
  for (const auto& grp : groups) {
    EigenBlock b;
    b.real_part = ev(grp.front()).real();
    if (std::abs(b.real_part) <= gtol) b.real_part = 0.0;
    b.dim = static_cast<int>(grp.size());
    Mat span(n, 2 * grp.size());
    for (std::size_t c = 0; c < grp.size(); ++c) {
      b.max_imag = std::max(b.max_imag, std::abs(ev(grp[c]).imag()));
      span.col(2 * c) = vecs.col(grp[c]).real();
      span.col(2 * c + 1) = vecs.col(grp[c]).imag();
    }
    const Subspace e = Subspace::span(span);
    if (b.real_part == 0.0) {
      rep.zero_space_is_g1 = e.equals(g1);
    } else {
      for (int u = 0; u < e.dim(); ++u) {
        for (int v = u + 1; v < e.dim(); ++v) {
          rep.nonzero_abelian_residual =
              std::max(rep.nonzero_abelian_residual, g.bracket(e.basis().col(u), e.basis().col(v)).norm());
        }
      }
    }
    rep.blocks.push_back(b);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct CatalogRecipe {
  CatalogEntry entry;
  std::function<ReductiveSpace()> build;
};

ReductiveSpace clifford_entry(int n, int q, double lambda, double mu, M2Mode mode, const std::string& selector) {
  CliffordSpaceSpec s;
  s.n = n;
  s.copies = q;
  s.lambda = lambda;
  s.mu = mu;
  s.mode = mode;
  s.selector = selector;
  return build_clifford_space(s);
}

const std::vector<CatalogRecipe>& recipes() {
  static const std::vector<CatalogRecipe> list = [] {
    std::vector<CatalogRecipe> r;
    auto heis = [&](const std::string& id, int c, int q, const std::string& base) {
      r.push_back({{id, "heisenberg", "R^" + num(c), base}, [c, q] { return build_heisenberg({c, q, 1.0}); }});
    };
    heis("N(1,1)", 1, 1, "C");
    heis("N(1,2)", 1, 2, "C^2");
    heis("N(2,1)", 2, 1, "H");
    heis("N(2,2)", 2, 2, "H^2");
    heis("N(3;1,0)", 3, 1, "H");
    heis("N(3;2,0)", 3, 2, "H^2");
    heis("N(6,1)", 6, 1, "O");
    heis("N(7;1,0)", 7, 1, "O");
    auto triv = [&](const std::string& id, const std::string& fam, TrivialBranch b, int n, const std::string& base) {
      r.push_back({{id, fam, "S^1", base}, [b, n] { return build_trivial_module_space(b, n); }});
    };
    triv("SU(3)/SU(2)", "compact", TrivialBranch::SuCompact, 2, "CP^2");
    triv("SU(4)/SU(3)", "compact", TrivialBranch::SuCompact, 3, "CP^3");
    triv("SU(2,1)/SU(2)", "noncompact", TrivialBranch::SuNoncompact, 2, "CH^2");
    triv("SU(3,1)/SU(3)", "noncompact", TrivialBranch::SuNoncompact, 3, "CH^3");
    const double mu = 1.0 / std::sqrt(2.0);
    auto cliff = [&](const std::string& id, const std::string& fam, int n, int q, double lambda, double m,
                     M2Mode mode, const std::string& sel, const std::string& fibre, const std::string& base) {
      r.push_back({{id, fam, fibre, base}, [=] { return clifford_entry(n, q, lambda, m, mode, sel); }});
    };
    for (int q = 1; q <= 2; ++q) {
      const std::string Q = num(q);
      const std::string Q1 = num(q + 1);
      const std::string hq = "HP^" + Q;
      const std::string hh = "HH^" + Q;
      const std::string sig_u = "signature(" + num(4 * q) + "," + num((q + 1) * (2 * q + 3) - 4 * q) + ")";
      const std::string sig_d = "signature(" + num(4 * q) + "," + num((q + 1) * (2 * q + 3) - 4 * q + 3) + ")";
      cliff("Sp(" + Q1 + ")/U(1)Sp(" + Q + ")", "compact", 2, q, 1.0, mu, M2Mode::Completed, "negative-definite",
            "S^2", hq);
      cliff("Sp(" + Q + ",1)/U(1)Sp(" + Q + ")", "noncompact", 2, q, 1.0, mu, M2Mode::Completed, sig_u, "S^2", hh);
      cliff("Sp(1)Sp(" + Q + ")xR^" + num(4 * q) + "/U(1)Sp(" + Q + ")", "compact", 2, q, 1.0, mu, M2Mode::Zero, "",
            "S^2", "R^" + num(4 * q));
      cliff("Sp(1)Sp(" + Q1 + ")/DSp(1)Sp(" + Q + ")", "compact", 3, q, 1.0, mu, M2Mode::Completed,
            "negative-definite", "S^3", hq);
      cliff("Sp(1)Sp(" + Q + ",1)/DSp(1)Sp(" + Q + ")", "noncompact", 3, q, 1.0, mu, M2Mode::Completed, sig_d, "S^3",
            hh);
      cliff("Sp(1)(Sp(1)Sp(" + Q + ")xR^" + num(4 * q) + ")/DSp(1)Sp(" + Q + ")", "compact", 3, q, 1.0, mu,
            M2Mode::Zero, "", "S^3", "R^" + num(4 * q));
    }
    cliff("Spin(7)xdelta7/Spin(6)", "compact", 6, 1, 1.0, mu, M2Mode::Zero, "", "S^6", "R^8");
    cliff("Spin(9)/Spin(7)", "compact", 7, 1, 1.0, mu, M2Mode::Completed, "negative-definite", "S^7", "S^8");
    cliff("Spin(8)xdelta8+/Spin(7)", "compact", 7, 1, 1.0, mu, M2Mode::Zero, "", "S^7", "R^8");
    cliff("Spin(8,1)/Spin(7)", "noncompact", 7, 1, 1.0, mu, M2Mode::Completed, "signature(8,28)", "S^7", "H^8");
    auto hyp = [&](const std::string& id, int f) {
      r.push_back({{id, "hyperbolic", "R", "R^" + num(f)}, [f] {
                     ReductiveSpace s = build_semidirect_hyperbolic({f, 1, 1.0, 0.0});
                     return s;
                   }});
    };
    hyp("H^2=RxR", 1);
    hyp("H^3=RxC", 2);
    hyp("H^5=RxH", 4);
    return r;
  }();
  return list;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    for (const auto& r : recipes()) e.push_back(r.entry);
    return e;
  }();
  return entries;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog_entries()) ids.push_back(e.id);
  return ids;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& id) {
  for (const auto& e : catalog_entries()) {
    if (e.id == id) return e;
  }
  return std::nullopt;
}

ReductiveSpace build_catalog_space(const std::string& id) {
  // Construction is deterministic, so built spaces are shared.
  static std::mutex mutex;
  static std::map<std::string, ReductiveSpace> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
  }
  const auto& rs = recipes();
  auto it = std::find_if(rs.begin(), rs.end(), [&](const CatalogRecipe& r) { return r.entry.id == id; });
  if (it == rs.end()) throw std::out_of_range("unknown catalog id '" + id + "'");
  ReductiveSpace s = it->build();
  s.id = id;
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(id, s);
  return s;
}

std::vector<ReductiveSpace> catalog() {
  std::vector<ReductiveSpace> spaces;
  for (const auto& id : catalog_ids()) spaces.push_back(build_catalog_space(id));
  return spaces;
}

std::vector<ReductiveSpace> symmetric_controls() {
  std::vector<ReductiveSpace> out;
  {
    // Real Grassmannian SO(5)/SO(3)SO(2).
    std::vector<Mat> mats;
    std::vector<std::string> labels;
    auto add = [&](int i, int j) {
      mats.push_back(rotation_generator(5, i, j));
      labels.push_back("L" + num(i + 1) + num(j + 1));
    };
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) add(i, j);
    }
    add(3, 4);
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 5; ++j) add(i, j);
    }
    ReductiveSpace s;
    s.id = "SO(5)/SO(3)SO(2)";
    s.algebra = matrix_lie_algebra(mats).algebra();
    s.algebra.set_labels(labels);
    s.k_indices = range(0, 4);
    s.blocks = {range(4, 10)};
    s.flags.push_back("symmetric");
    validate_space(s);
    out.push_back(s);
  }
  {
    // SU(3) x SU(3) / diagonal SU(3), basis (X, X)/sqrt2 then (X, -X)/sqrt2.
    const LieAlgebra a = su_standard(3).algebra();
    const int d = a.dim();
    const LieAlgebra sum = direct_sum(a, a);
    Mat f(2 * d, 2 * d);
    const Mat id = Mat::Identity(d, d) / std::sqrt(2.0);
    f << id, id, id, -id;
    ReductiveSpace s;
    s.id = "SU(3)xSU(3)/DSU(3)";
    s.algebra = pullback(sum, f);
    s.algebra.set_inner_product(Mat::Identity(2 * d, 2 * d));
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("k" + num(i + 1));
    for (int i = 0; i < d; ++i) labels.push_back("p" + num(i + 1));
    s.algebra.set_labels(labels);
    s.k_indices = range(0, d);
    s.blocks = {range(d, 2 * d)};
    s.flags.push_back("symmetric");
    validate_space(s);
    out.push_back(s);
  }
  return out;
}

}  // namespace isocoh
