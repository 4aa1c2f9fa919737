#pragma once

// Warped products I x_f F with metric dt^2 + f(t)^2 g_F over a homogeneous
// fibre: closed-form curvature, a finite-difference oracle on the explicit
// metric, and the classification of inhomogeneous cohomogeneity-two
// manifolds by interval type.
//
// Profile grammar (parse_profile):
//   exp(-L*t)      f = exp(-L t), L a decimal number; "exp(-l*t)" reads l
//                  from the parameter map (default 1)
//   sin | sinh     f = sin t, f = sinh t
//   const(C)       f = C; "const" reads c from the parameter map (default 1)
//   poly(a0,a1,..) f = a0 + a1 t + a2 t^2 + ...
// Tabulated profiles are CSV files with columns t,f,df,ddf (an optional
// header line is skipped); values are linearly interpolated.

#include "isocoh/geometry.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isocoh {

/// Finite-difference step of the curvature oracle.
inline constexpr double kFiniteDifferenceStep = 1e-4;
/// Agreement tolerance between closed form and oracle.
inline constexpr double kFiniteDifferenceTol = 1e-5;

struct ProfileValue {
  double f = 0.0;
  double df = 0.0;
  double ddf = 0.0;
};

class Profile {
 public:
  Profile() = default;
  Profile(std::string name, std::function<ProfileValue(double)> eval);
  const std::string& name() const { return name_; }
  ProfileValue operator()(double t) const;

 private:
  std::string name_;
  std::function<ProfileValue(double)> eval_;
};

/// Throws std::invalid_argument on a malformed specification.
Profile parse_profile(const std::string& spec, const std::map<std::string, double>& params = {});
Profile load_profile_csv(const std::string& path);
Profile profile_from_table(const std::vector<std::array<double, 4>>& rows, std::string name = "table");

/// The fibre: a reductive space with invariant metric or a round sphere.
struct Fiber {
  std::string name;
  int dim = 0;
  CurvatureTensor curvature;  ///< orthonormal frame at the base point
  std::optional<InvariantMetricSpace> space;
  bool round_sphere = false;
};

Fiber fiber_from_space(const InvariantMetricSpace& ms);
/// Unit round sphere S^n.
Fiber round_sphere_fiber(int n);
/// Flat R^n.
Fiber flat_fiber(int n);

enum class IntervalKind { Line, HalfLine, Segment };

struct WarpedProduct {
  IntervalKind interval = IntervalKind::Line;
  double length = 0.0;  ///< segment length L
  Profile profile;
  Fiber fiber;

  int dim() const { return 1 + fiber.dim; }
  /// Interior parameter range used for sampling.
  std::pair<double, double> sample_range() const;
};

/// Curvature tensor of dt^2 + f^2 g_F at t in the orthonormal frame
/// {T, E_1, ..., E_n} (E_i = f^{-1} times a fibre orthonormal vector).
CurvatureTensor warped_curvature_tensor(const WarpedProduct& w, double t);

/// Closed-form sectional curvature of the plane spanned by the orthonormal
/// frame vectors x, y (component 0 along T). Throws at degenerate t.
double warped_sectional_curvature(const WarpedProduct& w, double t, const Vec& x, const Vec& y);

/// Independent oracle: Christoffel symbols and curvature by central
/// differences of the explicit metric dt^2 + f(t)^2 h(x) in fibre normal
/// coordinates, h_ij = delta_ij + 1/3 R^F_ikjl x^k x^l.
double warped_sectional_curvature_fd(const WarpedProduct& w, double t, const Vec& x, const Vec& y,
                                     double h = kFiniteDifferenceStep);

struct WarpedAgreement {
  int samples = 0;
  double max_difference = 0.0;
};

/// Compares closed form and oracle on seeded (t, plane) samples.
WarpedAgreement compare_warped_curvature(const WarpedProduct& w, int samples, std::uint64_t seed);

struct InhomogeneousClassification {
  std::string case_label;  ///< "i", "ii" or "iii"
  std::string topology;    ///< short description of the manifold type
  bool fiber_check = false;
  int isotropy_cohomogeneity = 0;
  std::vector<std::string> warnings;
};

/// Case by interval kind, fibre admissibility and the cohomogeneity of the
/// fibre isotropy representation plus a trivial line. Throws
/// std::invalid_argument on boundary violations or inadmissible fibres.
InhomogeneousClassification validate_inhomogeneous(const WarpedProduct& w);

}  // namespace isocoh
