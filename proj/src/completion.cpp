#include "isocoh/completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace isocoh {

LieAlgebra CompletionSolution::assemble(const Vec& y) const {
  if (y.size() != unknowns()) throw std::invalid_argument("CompletionSolution::assemble: wrong length");
  LieAlgebra g = base_;
  const int d = static_cast<int>(target_.cols());
  const double scale = y.size() ? y.cwiseAbs().maxCoeff() : 0.0;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    Vec v = target_ * y.segment(static_cast<int>(p) * d, d);
    for (int k = 0; k < v.size(); ++k) {
      if (std::abs(v(k)) < 1e-14 * std::max(1.0, scale)) v(k) = 0.0;
    }
    g.set_bracket(pairs_[p].first, pairs_[p].second, v);
  }
  return g;
}

Vec CompletionSolution::point(const Vec& t) const {
  if (t.size() != dimension()) throw std::invalid_argument("CompletionSolution::point: wrong parameter count");
  return particular_ + homogeneous_ * t;
}

LieAlgebra CompletionSolution::assemble_at(const Vec& t) const { return assemble(point(t)); }

namespace {

// Affine expression sum_u coef(l,u) y_u + constant(l) for an n-vector.
struct AffineVec {
  Mat coef;
  Vec constant;
  bool has_linear = false;
};

}  // namespace

CompletionSolution complete_bracket(const CompletionProblem& problem, double tol) {
  const LieAlgebra& skel = problem.skeleton;
  const int n = skel.dim();
  if (problem.target.ambient_dim() != n) throw std::invalid_argument("complete_bracket: target dimension mismatch");

  std::vector<int> s = problem.unknown;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<char> in_s(n, 0);
  for (int i : s) {
    if (i < 0 || i >= n) throw std::out_of_range("complete_bracket: unknown index out of range");
    in_s[i] = 1;
  }
  const Mat& tb = problem.target.basis();
  const int d = static_cast<int>(tb.cols());
  for (int i : s) {
    if (d > 0 && tb.row(i).cwiseAbs().maxCoeff() > 1e-12) {
      throw std::invalid_argument("complete_bracket: target meets the unknown block; Jacobi is not linear");
    }
  }

  CompletionSolution sol;
  sol.target_ = tb;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      pair_index[s[a]][s[b]] = static_cast<int>(sol.pairs_.size());
      sol.pairs_.emplace_back(s[a], s[b]);
    }
  }
  // Base algebra: skeleton with the unknown block cleared.
  LieAlgebra base = skel;
  for (const auto& [a, b] : sol.pairs_) base.set_bracket(a, b, Vec::Zero(n));
  sol.base_ = base;

  const int unknowns = static_cast<int>(sol.pairs_.size()) * d;
  const double scale = std::max(1.0, base.max_abs_constant());

  // w[k] column t = [T_t, b_k] (fixed, since T avoids S).
  std::vector<Mat> w(n, Mat::Zero(n, d));
  for (int k = 0; k < n; ++k) {
    for (int t = 0; t < d; ++t) {
      Vec acc = Vec::Zero(n);
      for (int m = 0; m < n; ++m) {
        if (tb(m, t) != 0.0) acc += tb(m, t) * base.bracket_basis(m, k);
      }
      w[k].col(t) = acc;
    }
  }

  auto unknown_pair = [&](int i, int j, int& pair, double& sign) {
    if (i == j || !in_s[i] || !in_s[j]) return false;
    if (i < j) {
      pair = pair_index[i][j];
      sign = 1.0;
    } else {
      pair = pair_index[j][i];
      sign = -1.0;
    }
    return true;
  };

  // [[b_i, b_j], b_k] as an affine expression.
  auto double_bracket = [&](int i, int j, int k, AffineVec& out) {
    int p = -1;
    double sg = 0.0;
    if (unknown_pair(i, j, p, sg)) {
      out.coef.middleCols(p * d, d) += sg * w[k];
      out.has_linear = true;
      return;
    }
    for (int m = 0; m < n; ++m) {
      const double vm = base.c(i, j, m);
      if (vm == 0.0) continue;
      int q = -1;
      double sq = 0.0;
      if (unknown_pair(m, k, q, sq)) {
        out.coef.middleCols(q * d, d) += (vm * sq) * tb;
        out.has_linear = true;
      } else {
        for (int l = 0; l < n; ++l) out.constant(l) += vm * base.c(m, k, l);
      }
    }
  };

  AffineSolver solver(unknowns);
  RowBatcher batcher(solver, 128);
  AffineVec expr;
  expr.coef.resize(n, unknowns);
  expr.constant.resize(n);

  auto process = [&](int i, int j, int k) {
    expr.coef.setZero();
    expr.constant.setZero();
    expr.has_linear = false;
    double_bracket(i, j, k, expr);
    double_bracket(j, k, i, expr);
    double_bracket(k, i, j, expr);
    for (int l = 0; l < n; ++l) {
      const bool linear = expr.has_linear && expr.coef.row(l).cwiseAbs().maxCoeff() > 0.0;
      if (linear) {
        batcher.push(expr.coef.row(l).transpose(), expr.constant(l));
      } else if (std::abs(expr.constant(l)) > tol * scale) {
        // A fixed Jacobi violation: no completion can repair it.
        sol.consistent_ = false;
        sol.inconsistency_ = std::max(sol.inconsistency_, std::abs(expr.constant(l)));
      }
    }
  };

  // Triples touching the unknown block most often first: they cut the
  // solution space down fastest.
  for (int pass = 3; pass >= 0; --pass) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (in_s[i] + in_s[j] + in_s[k] == pass) process(i, j, k);
        }
      }
    }
  }
  batcher.flush();

  if (!solver.consistent()) {
    sol.consistent_ = false;
    sol.inconsistency_ = std::max(sol.inconsistency_, solver.inconsistency());
  }
  sol.particular_ = solver.particular();
  sol.homogeneous_ = solver.basis();
  return sol;
}

double min_perturbed_residual(const CompletionSolution& sol, const Vec& t, int count, double magnitude,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Vec base = sol.point(t);
  const Mat& h = sol.homogeneous();
  double best = std::numeric_limits<double>::infinity();
  for (int c = 0; c < count; ++c) {
    Vec dir = random_unit_vector(sol.unknowns(), rng);
    if (h.cols() > 0) dir -= h * (h.transpose() * dir);
    if (dir.norm() < 1e-12) continue;
    dir *= magnitude / dir.norm();
    best = std::min(best, jacobi_residual(sol.assemble(base + dir)));
  }
  return best;
}

}  // namespace isocoh
