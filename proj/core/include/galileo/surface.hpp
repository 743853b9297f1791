#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "galileo/curve.hpp"
#include "galileo/expr.hpp"
#include "galileo/galilean.hpp"
#include "galileo/jets.hpp"

namespace galileo {

struct Domain {
  Interval u{-1.0, 1.0};
  Interval v{-1.0, 1.0};
};

inline constexpr double kDegenerateW = 1e-12;
inline constexpr double kAdmissibleTolerance = 1e-12;

/// (u, v) -> (x, y, z) on a rectangle.
class Surface {
 public:
  /// All three coordinates must have arity 2 over the same variable pair.
  Surface(Expr x, Expr y, Expr z, Domain domain = {});

  static Surface parse(std::string_view x, std::string_view y, std::string_view z,
                       const std::array<std::string, 2>& variables = {"u", "v"}, Domain domain = {});

  const Expr& x() const { return x_; }
  const Expr& y() const { return y_; }
  const Expr& z() const { return z_; }
  const Domain& domain() const { return domain_; }
  const std::vector<std::string>& variables() const { return x_.variables(); }

  Point3 point(double u, double v) const;
  std::array<Jet2, 3> jets(double u, double v) const;

  Surface transformed(const GalileanMotion& m) const;
  Surface with_domain(const Domain& d) const { return Surface(x_, y_, z_, d); }

 private:
  Expr x_, y_, z_;
  Domain domain_;
};

/// Which g_i divides in the second fundamental form. `automatic` picks the
/// larger |g_i|; both choices agree wherever both are nonzero.
enum class SecondFormBranch { automatic, g1, g2 };

/// First and second fundamental forms at a point.
struct FundamentalData {
  double g1 = 0.0, g2 = 0.0;                // x_,1 and x_,2
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;   // y_,i y_,j + z_,i z_,j
  double W = 0.0;
  Vector3 N;                                // (0, -x1 z2 + x2 z1, x1 y2 - x2 y1) / W
  double L11 = 0.0, L12 = 0.0, L22 = 0.0;
  int branch = 1;                           // index of the g_i used for L_ij

  /// 1 if du1:du2 is the isotropic direction (g1 du1 + g2 du2 = 0), else 0.
  int epsilon(double du1, double du2) const;
  /// ds^2 = (g1 du1 + g2 du2)^2 + epsilon (h11 du1^2 + 2 h12 du1 du2 + h22 du2^2)
  double first_form(double du1, double du2) const;
};

/// Shared by the jet route and the finite-difference route. Throws
/// DegenerateError at an inadmissible point (g1 = g2 = 0) or where W <= 1e-12.
FundamentalData fundamental_from_partials(const std::array<Jet2, 3>& xyz,
                                          SecondFormBranch branch = SecondFormBranch::automatic);

FundamentalData fundamental(const Surface& s, double u, double v,
                            SecondFormBranch branch = SecondFormBranch::automatic);

/// K = (L11 L22 - L12^2) / W^2
/// H_canonical = (g2^2 L11 - 2 g1 g2 L12 + g1^2 L22) / (2 W^2)
/// H_paper = 2 H_canonical, the normalization every specialized closed-form
/// mean-curvature formula in this library uses (no 1/2 factor).
struct Curvatures {
  double K = 0.0;
  double H_canonical = 0.0;
  double H_paper = 0.0;
};

struct MeanCurvature {
  double canonical = 0.0;
  double paper = 0.0;
};

Curvatures curvatures_from(const FundamentalData& fd);
Curvatures curvatures(const Surface& s, double u, double v);
double gaussian_curvature(const Surface& s, double u, double v);
MeanCurvature mean_curvature(const Surface& s, double u, double v);

/// Partials of the coordinates from central differences of plain evaluation.
std::array<Jet2, 3> fd_partials(const Surface& s, double u, double v, const FdSteps& steps);
Curvatures curvatures_fd(const Surface& s, double u, double v, const FdSteps& steps);

struct SurfaceAdmissibility {
  bool admissible = false;
  std::optional<std::pair<double, double>> witness;
};

/// Admissible iff max(|g1|, |g2|) > 1e-12 at every node of an nu x nv grid.
SurfaceAdmissibility is_admissible_surface(const Surface& s, int nu = 21, int nv = 21);

}  // namespace galileo
