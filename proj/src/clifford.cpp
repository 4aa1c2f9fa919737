#include "isocoh/clifford.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace isocoh {

CliffordElement::CliffordElement(int n, int square) : n_(n), square_(square) {
  if (n < 1 || n > 30) throw std::invalid_argument("CliffordElement: unsupported n");
  if (square != 1 && square != -1) throw std::invalid_argument("CliffordElement: square must be +1 or -1");
}

CliffordElement CliffordElement::scalar(int n, double value, int square) {
  CliffordElement e(n, square);
  e.add_term(0, value);
  return e;
}

CliffordElement CliffordElement::generator(int n, int i, int square) {
  if (i < 1 || i > n) throw std::out_of_range("CliffordElement::generator");
  CliffordElement e(n, square);
  e.add_term(1u << (i - 1), 1.0);
  return e;
}

CliffordElement CliffordElement::blade(int n, const Blade& b, int square) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : b.indices) {
    if (i <= prev || i > n) throw std::invalid_argument("CliffordElement::blade: indices must increase within 1..n");
    mask |= 1u << (i - 1);
    prev = i;
  }
  CliffordElement e(n, square);
  e.add_term(mask, b.coefficient);
  return e;
}

void CliffordElement::add_term(std::uint32_t mask, double value) {
  if (value == 0.0) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, value);
    return;
  }
  it->second += value;
  if (it->second == 0.0) terms_.erase(it);
}

std::vector<Blade> CliffordElement::blades() const {
  std::vector<Blade> out;
  for (const auto& [mask, coef] : terms_) {
    Blade b;
    b.coefficient = coef;
    for (int i = 0; i < n_; ++i) {
      if (mask & (1u << i)) b.indices.push_back(i + 1);
    }
    out.push_back(std::move(b));
  }
  return out;
}

double CliffordElement::coefficient(const std::vector<int>& indices) const {
  std::uint32_t mask = 0;
  for (int i : indices) mask |= 1u << (i - 1);
  auto it = terms_.find(mask);
  return it == terms_.end() ? 0.0 : it->second;
}

int blade_product_sign(std::uint32_t a, std::uint32_t b, int square) {
  // Move each generator of b left past the larger generators of a.
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(a >> (bit + 1));
  }
  int sign = (swaps & 1) ? -1 : 1;
  if (square == -1 && (std::popcount(a & b) & 1)) sign = -sign;
  return sign;
}

CliffordElement CliffordElement::operator*(const CliffordElement& other) const {
  if (n_ != other.n_ || square_ != other.square_) throw std::invalid_argument("Clifford product: mismatched algebras");
  CliffordElement out(n_, square_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma ^ mb, blade_product_sign(ma, mb, square_) * ca * cb);
    }
  }
  return out;
}

CliffordElement CliffordElement::operator+(const CliffordElement& other) const {
  if (n_ != other.n_ || square_ != other.square_) throw std::invalid_argument("Clifford sum: mismatched algebras");
  CliffordElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& other) const { return *this + other * -1.0; }

CliffordElement CliffordElement::operator*(double s) const {
  CliffordElement out(n_, square_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * s);
  return out;
}

CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b) { return a * b; }

// ---------------------------------------------------------------------------
// Gamma matrices

namespace {

// Right multiplication by i, j, k on H with basis (1, i, j, k).
Mat quaternion_right(int unit) {
  // Products of basis units: table[a][b] = (sign, index) of e_a e_b.
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Mat m = Mat::Zero(4, 4);
  for (int a = 0; a < 4; ++a) m(idx[a][unit], a) = sgn[a][unit];
  return m;
}

// Octonion product e_a e_b for basis e_0 = 1, e_1..e_7, from the Fano plane
// lines (a, b, c) with e_a e_b = e_c.
struct OctProduct {
  int index;
  int sign;
};

OctProduct octonion_product(int a, int b) {
  static const std::array<std::array<int, 3>, 7> lines = {
      {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
  if (a == 0) return {b, 1};
  if (b == 0) return {a, 1};
  if (a == b) return {0, -1};
  for (const auto& l : lines) {
    for (int r = 0; r < 3; ++r) {
      const int x = l[r], y = l[(r + 1) % 3], z = l[(r + 2) % 3];
      if (a == x && b == y) return {z, 1};
      if (a == y && b == x) return {z, -1};
    }
  }
  throw std::logic_error("octonion table incomplete");
}

Mat octonion_left(int unit) {
  Mat m = Mat::Zero(8, 8);
  for (int b = 0; b < 8; ++b) {
    const auto p = octonion_product(unit, b);
    m(p.index, b) = p.sign;
  }
  return m;
}

}  // namespace

CliffordModule spin_module(int n) {
  if (n < 2 || n > 9) throw std::invalid_argument("spin_module: n must lie in 2..9");
  CliffordModule mod;
  mod.n = n;
  if (n <= 3) {
    mod.dim = 4;
    for (int i = 1; i <= n; ++i) mod.gammas.push_back(quaternion_right(i));
  } else if (n <= 7) {
    mod.dim = 8;
    for (int i = 1; i <= n; ++i) mod.gammas.push_back(octonion_left(i));
  } else {
    mod.dim = 16;
    std::vector<Mat> g;
    for (int i = 1; i <= 7; ++i) {
      Mat m = Mat::Zero(16, 16);
      m.topLeftCorner(8, 8) = octonion_left(i);
      m.bottomRightCorner(8, 8) = -octonion_left(i);
      g.push_back(std::move(m));
    }
    Mat g8 = Mat::Zero(16, 16);
    g8.topRightCorner(8, 8) = -Mat::Identity(8, 8);
    g8.bottomLeftCorner(8, 8) = Mat::Identity(8, 8);
    g.push_back(std::move(g8));
    if (n == 8) {
      mod.gammas = std::move(g);
    } else {
      // omega = G_1 ... G_8 is symmetric with omega^2 = 1 and anticommutes
      // with every G_i, so omega G_i (i <= 8) and omega generate Cl_{9,0}.
      Mat omega = Mat::Identity(16, 16);
      for (const Mat& m : g) omega = omega * m;
      mod.square = 1;
      for (const Mat& m : g) mod.gammas.push_back(omega * m);
      mod.gammas.push_back(omega);
    }
  }
  return mod;
}

CliffordModule repeat(const CliffordModule& module, int copies) {
  if (copies < 1) throw std::invalid_argument("repeat: need at least one copy");
  CliffordModule out;
  out.n = module.n;
  out.square = module.square;
  out.dim = module.dim * copies;
  for (const Mat& g : module.gammas) {
    Mat m = Mat::Zero(out.dim, out.dim);
    for (int c = 0; c < copies; ++c) m.block(c * module.dim, c * module.dim, module.dim, module.dim) = g;
    out.gammas.push_back(std::move(m));
  }
  return out;
}

double anticommutation_residual(const CliffordModule& module) {
  double r = 0.0;
  const Mat id = Mat::Identity(module.dim, module.dim);
  for (int i = 0; i < module.n; ++i) {
    for (int j = i; j < module.n; ++j) {
      Mat a = module.gammas[i] * module.gammas[j] + module.gammas[j] * module.gammas[i];
      if (i == j) a -= 2.0 * module.square * id;
      r = std::max(r, a.cwiseAbs().maxCoeff());
    }
  }
  return r;
}

Mat vector_action(const CliffordModule& module, const Vec& z) {
  if (z.size() != module.n) throw std::invalid_argument("vector_action: length mismatch");
  Mat m = Mat::Zero(module.dim, module.dim);
  for (int i = 0; i < module.n; ++i) m += z(i) * module.gammas[i];
  return m;
}

Mat blade_action(const CliffordModule& module, const CliffordElement& element) {
  if (element.n() != module.n || element.square() != module.square) {
    throw std::invalid_argument("blade_action: element and module belong to different algebras");
  }
  Mat out = Mat::Zero(module.dim, module.dim);
  for (const auto& [mask, coef] : element.terms()) {
    Mat prod = Mat::Identity(module.dim, module.dim);
    for (int i = 0; i < module.n; ++i) {
      if (mask & (1u << i)) prod = prod * module.gammas[i];
    }
    out += coef * prod;
  }
  return out;
}

std::vector<std::pair<int, int>> spin_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  }
  return p;
}

Representation spin_algebra(const CliffordModule& module) {
  std::vector<Mat> mats;
  for (const auto& [i, j] : spin_pairs(module.n)) mats.push_back(0.5 * module.gammas[i] * module.gammas[j]);
  Representation rep = matrix_lie_algebra(mats);
  LieAlgebra alg = rep.algebra();
  std::vector<std::string> labels;
  for (const auto& [i, j] : spin_pairs(module.n)) labels.push_back("e" + std::to_string(i + 1) + "e" + std::to_string(j + 1));
  alg.set_labels(labels);
  return Representation(alg, mats);
}

Representation spin_vector_representation(const CliffordModule& module) {
  const int n = module.n;
  const Representation spin = spin_algebra(module);
  std::vector<Mat> mats;
  for (const auto& [i, j] : spin_pairs(n)) {
    Mat m = Mat::Zero(n, n);
    m(j, i) = -module.square;
    m(i, j) = module.square;
    mats.push_back(std::move(m));
  }
  return Representation(spin.algebra(), std::move(mats));
}

}  // namespace isocoh
