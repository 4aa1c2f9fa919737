#include "isocoh/warped.hpp"

#include "isocoh/classical.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace isocoh {

// ---------------------------------------------------------------------------
// Profiles

Profile::Profile(std::string name, std::function<ProfileValue(double)> eval)
    : name_(std::move(name)), eval_(std::move(eval)) {}

ProfileValue Profile::operator()(double t) const {
  if (!eval_) throw std::logic_error("Profile: empty profile");
  return eval_(t);
}

namespace {

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("profile: not a number: '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw std::invalid_argument("profile: not a number: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double param(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

Profile parse_profile(const std::string& raw, const std::map<std::string, double>& params) {
  const std::string spec = trim(raw);
  static const std::regex exp_re(R"(exp\(\s*-\s*([^*\s]+)\s*\*\s*t\s*\))");
  static const std::regex const_re(R"(const(?:\((.*)\))?)");
  static const std::regex poly_re(R"(poly\((.*)\))");
  std::smatch m;
  if (std::regex_match(spec, m, exp_re)) {
    const std::string arg = m[1];
    const double l = arg == "l" ? param(params, "l", 1.0) : parse_number(arg);
    return Profile(spec, [l](double t) {
      const double e = std::exp(-l * t);
      return ProfileValue{e, -l * e, l * l * e};
    });
  }
  if (spec == "sin") {
    return Profile(spec, [](double t) { return ProfileValue{std::sin(t), std::cos(t), -std::sin(t)}; });
  }
  if (spec == "sinh") {
    return Profile(spec, [](double t) { return ProfileValue{std::sinh(t), std::cosh(t), std::sinh(t)}; });
  }
  if (std::regex_match(spec, m, const_re)) {
    const double c = m[1].matched ? parse_number(trim(m[1])) : param(params, "c", 1.0);
    return Profile(spec, [c](double) { return ProfileValue{c, 0.0, 0.0}; });
  }
  if (std::regex_match(spec, m, poly_re)) {
    std::vector<double> a;
    for (const std::string& s : split(m[1], ',')) a.push_back(parse_number(s));
    if (a.empty()) throw std::invalid_argument("profile: poly needs coefficients");
    return Profile(spec, [a](double t) {
      ProfileValue v;
      // Horner for f, f', f''.
      for (std::size_t k = a.size(); k-- > 0;) {
        v.ddf = v.ddf * t + 2.0 * v.df;
        v.df = v.df * t + v.f;
        v.f = v.f * t + a[k];
      }
      return v;
    });
  }
  throw std::invalid_argument("profile: unknown specification '" + spec + "'");
}

Profile profile_from_table(const std::vector<std::array<double, 4>>& input, std::string name) {
  std::vector<std::array<double, 4>> rows = input;
  if (rows.size() < 2) throw std::invalid_argument("profile table: need at least two rows");
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i][0] > rows[i - 1][0])) throw std::invalid_argument("profile table: t values must be distinct");
  }
  return Profile(std::move(name), [rows](double t) {
    if (t < rows.front()[0] || t > rows.back()[0]) throw std::out_of_range("profile table: t outside the table");
    auto it = std::upper_bound(rows.begin(), rows.end(), t, [](double x, const auto& r) { return x < r[0]; });
    if (it == rows.end()) --it;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double s = (t - lo[0]) / (hi[0] - lo[0]);
    auto lerp = [&](int c) { return (1.0 - s) * lo[c] + s * hi[c]; };
    return ProfileValue{lerp(1), lerp(2), lerp(3)};
  });
}

Profile load_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("profile csv: cannot open '" + path + "'");
  std::vector<std::array<double, 4>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 4) throw std::invalid_argument("profile csv: line " + std::to_string(lineno) + " needs 4 columns");
    std::array<double, 4> r{};
    try {
      for (int c = 0; c < 4; ++c) r[c] = parse_number(cells[c]);
    } catch (const std::invalid_argument&) {
      if (rows.empty() && lineno == 1) continue;  // header
      throw std::invalid_argument("profile csv: line " + std::to_string(lineno) + " is not numeric");
    }
    rows.push_back(r);
  }
  return profile_from_table(rows, path);
}

// ---------------------------------------------------------------------------
// Fibres

Fiber fiber_from_space(const InvariantMetricSpace& ms) {
  Fiber f;
  f.name = ms.space.id;
  f.dim = ms.dim();
  f.curvature = curvature_tensor(ms);
  f.space = ms;
  return f;
}

Fiber round_sphere_fiber(int n) {
  if (n < 1) throw std::invalid_argument("round_sphere_fiber: n >= 1");
  Fiber f;
  f.name = "S^" + std::to_string(n);
  f.dim = n;
  f.round_sphere = true;
  f.curvature = CurvatureTensor(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      f.curvature(a, b, b, a) = 1.0;
      f.curvature(a, b, a, b) = -1.0;
    }
  }
  return f;
}

Fiber flat_fiber(int n) {
  if (n < 1) throw std::invalid_argument("flat_fiber: n >= 1");
  Fiber f;
  f.name = "R^" + std::to_string(n);
  f.dim = n;
  f.curvature = CurvatureTensor(n);
  return f;
}

std::pair<double, double> WarpedProduct::sample_range() const {
  switch (interval) {
    case IntervalKind::Line:
      return {-2.0, 2.0};
    case IntervalKind::HalfLine:
      return {0.3, 2.0};
    case IntervalKind::Segment:
      return {0.1 * length, 0.9 * length};
  }
  return {0.0, 0.0};
}

// ---------------------------------------------------------------------------
// Curvature

CurvatureTensor warped_curvature_tensor(const WarpedProduct& w, double t) {
  const ProfileValue p = w.profile(t);
  if (!(p.f > 0.0)) throw std::invalid_argument("warped curvature: profile must be positive at t");
  const int n = w.fiber.dim;
  CurvatureTensor r(n + 1);
  const double mixed = -p.ddf / p.f;  // sectional curvature of {T, E_i}
  for (int i = 1; i <= n; ++i) {
    r(0, i, i, 0) = mixed;
    r(i, 0, 0, i) = mixed;
    r(0, i, 0, i) = -mixed;
    r(i, 0, i, 0) = -mixed;
  }
  const double f2 = p.f * p.f;
  const double d2 = p.df * p.df / f2;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double v = w.fiber.curvature(i, j, k, l) / f2;
          v -= d2 * ((i == l && j == k ? 1.0 : 0.0) - (i == k && j == l ? 1.0 : 0.0));
          r(i + 1, j + 1, k + 1, l + 1) = v;
        }
      }
    }
  }
  return r;
}

namespace {

void check_plane(const Vec& x, const Vec& y, int dim) {
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("warped curvature: plane vectors have wrong length");
  if (std::abs(x.norm() - 1.0) > kCurvatureTol || std::abs(y.norm() - 1.0) > kCurvatureTol ||
      std::abs(x.dot(y)) > kCurvatureTol) {
    throw std::invalid_argument("warped curvature: plane is not orthonormal");
  }
}

}  // namespace

double warped_sectional_curvature(const WarpedProduct& w, double t, const Vec& x, const Vec& y) {
  check_plane(x, y, w.dim());
  return warped_curvature_tensor(w, t).evaluate(x, y, y, x);
}

double warped_sectional_curvature_fd(const WarpedProduct& w, double t, const Vec& x, const Vec& y, double h) {
  check_plane(x, y, w.dim());
  const int n = w.fiber.dim;
  const int N = n + 1;
  const CurvatureTensor& rf = w.fiber.curvature;
  const Profile& prof = w.profile;

  auto metric = [&](const Vec& z) {
    Mat g = Mat::Zero(N, N);
    g(0, 0) = 1.0;
    const double f = prof(z(0)).f;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double hij = i == j ? 1.0 : 0.0;
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) hij += rf(i, k, j, l) * z(1 + k) * z(1 + l) / 3.0;
        }
        g(1 + i, 1 + j) = f * f * hij;
      }
    }
    return g;
  };
  // gamma[a](b, c) = Gamma^a_bc.
  auto christoffel = [&](const Vec& z) {
    std::vector<Mat> dg(N);
    for (int k = 0; k < N; ++k) {
      Vec zp = z, zm = z;
      zp(k) += h;
      zm(k) -= h;
      dg[k] = (metric(zp) - metric(zm)) / (2.0 * h);
    }
    const Mat ginv = metric(z).inverse();
    std::vector<Mat> gamma(N, Mat::Zero(N, N));
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        for (int c = 0; c < N; ++c) {
          double s = 0.0;
          for (int d = 0; d < N; ++d) s += ginv(a, d) * (dg[b](c, d) + dg[c](b, d) - dg[d](b, c));
          gamma[a](b, c) = 0.5 * s;
        }
      }
    }
    return gamma;
  };

  Vec z0 = Vec::Zero(N);
  z0(0) = t;
  const auto g0 = christoffel(z0);
  std::vector<std::vector<Mat>> dgamma(N);  // dgamma[i][a](b,c) = d_i Gamma^a_bc
  for (int i = 0; i < N; ++i) {
    Vec zp = z0, zm = z0;
    zp(i) += h;
    zm(i) -= h;
    const auto gp = christoffel(zp);
    const auto gm = christoffel(zm);
    dgamma[i].resize(N);
    for (int a = 0; a < N; ++a) dgamma[i][a] = (gp[a] - gm[a]) / (2.0 * h);
  }
  const Mat g = metric(z0);
  // R^l_ijk = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik, R_ijkl = g_lm R^m_ijk.
  auto riemann_up = [&](int l, int i, int j, int k) {
    double v = dgamma[i][l](j, k) - dgamma[j][l](i, k);
    for (int m = 0; m < N; ++m) v += g0[l](i, m) * g0[m](j, k) - g0[l](j, m) * g0[m](i, k);
    return v;
  };
  // Frame vectors to coordinate vectors: T = d_t, E_i = d_i / f.
  const double f = prof(t).f;
  Vec xc = x, yc = y;
  for (int i = 1; i < N; ++i) {
    xc(i) /= f;
    yc(i) /= f;
  }
  double k = 0.0;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      const double xy = xc(a) * yc(b);
      if (xy == 0.0) continue;
      for (int c = 0; c < N; ++c) {
        if (yc(c) == 0.0) continue;
        for (int d = 0; d < N; ++d) {
          if (xc(d) == 0.0) continue;
          double low = 0.0;
          for (int m = 0; m < N; ++m) low += g(d, m) * riemann_up(m, a, b, c);
          k += xy * yc(c) * xc(d) * low;
        }
      }
    }
  }
  return k;
}

WarpedAgreement compare_warped_curvature(const WarpedProduct& w, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto [lo, hi] = w.sample_range();
  std::uniform_real_distribution<double> ut(lo, hi);
  WarpedAgreement out;
  for (int s = 0; s < samples; ++s) {
    const double t = ut(rng);
    const Vec x = random_unit_vector(w.dim(), rng);
    Vec y = random_unit_vector(w.dim(), rng);
    y -= y.dot(x) * x;
    y.normalize();
    const double closed = warped_sectional_curvature(w, t, x, y);
    const double fd = warped_sectional_curvature_fd(w, t, x, y);
    out.max_difference = std::max(out.max_difference, std::abs(closed - fd));
    ++out.samples;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

constexpr double kBoundaryTol = 1e-9;

void require_positive(const Profile& p, double lo, double hi) {
  const int count = 200;
  for (int i = 1; i < count; ++i) {
    const double t = lo + (hi - lo) * i / count;
    if (!(p(t).f > 0.0)) {
      throw std::invalid_argument("warped product: profile is not positive at t = " + std::to_string(t));
    }
  }
}

bool is_symmetric(const ReductiveSpace& s) {
  const std::vector<int> m = s.m_indices();
  double r = 0.0;
  for (int a : m) {
    for (int b : m) {
      for (int c : m) r = std::max(r, std::abs(s.algebra.c(a, b, c)));
    }
  }
  return r <= kJacobiTol * std::max(1.0, s.algebra.max_abs_constant());
}

Representation fiber_isotropy(const Fiber& f) {
  if (f.space) return isotropy_representation(f.space->space).rep;
  if (f.round_sphere && f.dim >= 2) return so_standard(f.dim);
  return Representation(LieAlgebra(0), {}, Mat::Identity(f.dim, f.dim));
}

}  // namespace

InhomogeneousClassification validate_inhomogeneous(const WarpedProduct& w) {
  InhomogeneousClassification c;
  const Profile& p = w.profile;
  auto smooth_end = [&](double t, double slope, const std::string& where) {
    const ProfileValue v = p(t);
    if (std::abs(v.df - slope) > kBoundaryTol || std::abs(v.ddf) > kBoundaryTol) {
      std::ostringstream os;
      os << "metric not smooth at " << where << ": f' = " << v.df << ", f'' = " << v.ddf << " (expected "
         << slope << ", 0)";
      c.warnings.push_back(os.str());
    }
  };
  const std::string n1 = std::to_string(w.fiber.dim + 1);
  switch (w.interval) {
    case IntervalKind::Line:
      require_positive(p, -10.0, 10.0);
      c.case_label = "i";
      c.topology = "R x G/K (no singular orbits)";
      break;
    case IntervalKind::HalfLine:
      if (std::abs(p(0.0).f) > kBoundaryTol) throw std::invalid_argument("warped product: half line needs f(0) = 0");
      require_positive(p, 0.0, 10.0);
      smooth_end(0.0, 1.0, "t = 0");
      c.case_label = "ii";
      c.topology = "R^" + n1 + " (one singular orbit, a point)";
      break;
    case IntervalKind::Segment:
      if (!(w.length > 0.0)) throw std::invalid_argument("warped product: segment length must be positive");
      if (std::abs(p(0.0).f) > kBoundaryTol || std::abs(p(w.length).f) > kBoundaryTol) {
        throw std::invalid_argument("warped product: segment needs f(0) = f(L) = 0");
      }
      require_positive(p, 0.0, w.length);
      smooth_end(0.0, 1.0, "t = 0");
      smooth_end(w.length, -1.0, "t = L");
      c.case_label = "iii";
      c.topology = "S^" + n1 + " (two singular orbits, points)";
      break;
  }

  const Representation iso = fiber_isotropy(w.fiber);
  const int fiber_cohom = cohomogeneity(iso);
  bool sphere = w.fiber.round_sphere;
  bool rank_one = sphere;
  if (w.fiber.space) {
    const ReductiveSpace& s = w.fiber.space->space;
    rank_one = is_symmetric(s) && fiber_cohom == 1;
    sphere = rank_one && fingerprint(s.algebra) == fingerprint(sphere_space(w.fiber.dim).algebra) &&
             s.k_dim() == w.fiber.dim * (w.fiber.dim - 1) / 2;
  }
  if (c.case_label == "i") {
    c.fiber_check = rank_one;
    if (!rank_one) throw std::invalid_argument("warped product: fibre is not a rank-one symmetric space");
  } else {
    c.fiber_check = sphere;
    if (!sphere) throw std::invalid_argument("warped product: principal orbits must be round spheres");
  }
  const Representation line = Representation::trivial(iso.algebra(), 1);
  c.isotropy_cohomogeneity = cohomogeneity(direct_sum(iso, line));
  return c;
}

}  // namespace isocoh
