#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galileo/expr.hpp"
#include "galileo/galilean.hpp"
#include "galileo/jets.hpp"

namespace galileo {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// n uniform samples of [lo, hi], endpoints included exactly (n >= 2).
std::vector<double> uniform_grid(const Interval& range, int n);

inline constexpr int kDefaultCurveSamples = 101;
inline constexpr double kTangentTolerance = 1e-12;
inline constexpr double kUnitSpeedTolerance = 1e-9;
inline constexpr double kPlanarityTolerance = 1e-9;
inline constexpr double kCurvatureFloor = 1e-12;

/// s -> (x(s), y(s), z(s)) on a closed interval.
class Curve {
 public:
  /// The three expressions must have arity 1 over the same variable name and
  /// the domain must be finite with lo < hi (PreconditionError otherwise).
  Curve(Expr x, Expr y, Expr z, Interval domain);

  static Curve parse(std::string_view x, std::string_view y, std::string_view z,
                     const std::string& variable, Interval domain);

  const Expr& x() const { return x_; }
  const Expr& y() const { return y_; }
  const Expr& z() const { return z_; }
  const Interval& domain() const { return domain_; }
  const std::string& variable() const { return x_.variables().front(); }

  Point3 point(double s) const;
  /// Third-order jets of the three coordinates at s.
  std::array<Jet1, 3> jets(double s) const;

  /// Applies a Galilean motion to the coordinate functions.
  Curve transformed(const GalileanMotion& m) const;
  /// t -> this(t - s0), defined on [lo + s0, hi + s0].
  Curve shifted(double s0) const;

 private:
  Expr x_, y_, z_;
  Interval domain_;
};

struct CurveAdmissibility {
  bool admissible = false;
  /// A parameter where x' vanishes (grid node, or the root bracketed by a
  /// sign change of x' between two nodes).
  std::optional<double> witness;
};

/// Admissible iff |x'| > 1e-12 at every grid sample and x' keeps its sign.
CurveAdmissibility is_admissible(const Curve& c, int samples = kDefaultCurveSamples);

/// sqrt(y''^2 + z''^2). Requires unit speed (|x'| = 1 within 1e-9).
double curvature(const Curve& c, double s);

/// det(a', a'', a''') / kappa^2. Requires kappa > 1e-12 (DegenerateError).
double torsion(const Curve& c, double s);

enum class Planarity { planar, space, mixed };

struct PlanarityReport {
  Planarity kind = Planarity::mixed;
  double max_abs_torsion = 0.0;  // over nodes where torsion is defined
  double min_abs_torsion = 0.0;
  int degenerate_nodes = 0;      // nodes with kappa <= 1e-12
};

/// planar: max |tau| < 1e-9 (or kappa == 0 on the whole grid);
/// space: min |tau| > 1e-9 at every node (kappa > 0 everywhere);
/// mixed: neither.
PlanarityReport classify_planarity(const Curve& c, int samples = kDefaultCurveSamples);
bool is_planar(const Curve& c, int samples = kDefaultCurveSamples);
bool is_space_curve(const Curve& c, int samples = kDefaultCurveSamples);

struct UnitSpeedReport {
  bool unit_speed = false;
  double max_residual = 0.0;           // max |p'^2 + q'^2 - 1|
  double max_identity_residual = 0.0;  // max |p'p'' + q'q''|
};

/// For an isotropic curve (0, p, q): checks p'^2 + q'^2 = 1 and its
/// derivative identity p'p'' + q'q'' = 0 on the grid. Throws
/// PreconditionError if x is not identically zero on the grid.
UnitSpeedReport check_isotropic_unit_speed(const Curve& c, int samples = kDefaultCurveSamples);

}  // namespace galileo
