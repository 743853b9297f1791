#pragma once

// Translation surfaces r(u, v) = alpha(u) + beta(v) and the constant
// curvature families built from them.
//
//   type 1/2   (x, y, f(x) + g(y)),  (x + y, g(y), f(x))
//   affine     (x, y, f(a11 x + a12 y) + g(a21 x + a22 y)), det A != 0
//   type 3     (u, f1(u) + g1(v), f2(u) + g2(v)), beta = (0, g1, g2) unit-speed isotropic
//   type 4     (u + v, f1(u) + g(v), f2(u) + a v)
//   ruled C    (u, x(u) + v y(u), v z(u))
//
// Closed-form curvatures use the H_paper normalization (no 1/2 factor), and
// the affine Gaussian curvature uses the squared bracket
// w^2 f'' g'' / [1 + (a12 f' + a22 g')^2]^2, which is what the general
// fundamental-form machinery produces for the graph.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "galileo/curve.hpp"
#include "galileo/expr.hpp"
#include "galileo/ode.hpp"
#include "galileo/surface.hpp"

namespace galileo {

inline constexpr int kValidationSamples = 101;
inline constexpr int kValidationGrid = 21;
inline constexpr double kTorsionCheckFloor = 1e-9;
inline constexpr double kDomainShrink = 0.9;

struct AffineMatrix {
  double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

  double w() const { return a11 * a22 - a12 * a21; }
  /// Throws PreconditionError when |det| <= 1e-12.
  void validate() const;
  static AffineMatrix identity() { return {}; }
};

enum class FamilyKind {
  type1_2_standard,
  affine,
  type3,
  type4,
  constantK_type1,
  cmc_cylinder_B_i,
  cmc_cylinder_B_ii_1,
  parabolic_ruled,
  type3_circle,
  type4_cmc_ode,
  ruled_type_C,
};

std::string_view name_of(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

// Univariate functions (f, g, f1, ...) are arity-1 expressions over any
// variable name; constructors substitute them into the surface parameters.

struct StandardParams {
  int type = 1;  // 1 or 2
  Expr f, g;
};

struct AffineParams {
  AffineMatrix A;
  Expr f, g;
};

struct Type3Params {
  Expr f1, f2, g1, g2;
};

struct Type4Params {
  Expr f1, f2, g;
  double a = 0.0;
};

struct ConstantKParams {
  double K0 = 1.0;
  double c = 1.0;  // f'' of the non-isotropic translating curve
};

enum class CmcVariant { B_i, B_ii_1 };

struct CmcCylinderParams {
  double H0 = 1.0;
  CmcVariant variant = CmcVariant::B_i;
  std::optional<Expr> f;  // B_i: profile f(a11 x); unset means f = 0
  double c1 = 0.0;        // B_ii_1: f = c1 u
  AffineMatrix A;
};

struct ParabolicRuledParams {
  AffineMatrix A{1.0, 1.0, 0.0, 1.0};
  double c1 = 1.0;
};

struct Type3CircleParams {
  double H0 = 1.0;
  Expr f1, f2;
};

struct Type4CmcOdeParams {
  double H0 = 0.1;
  Expr f2 = Expr::parse("u^2", {"u"});
  double a = 0.0;
  double c1 = 0.0;
  double u0 = 1.0, u_end = 2.0;
  double f1_0 = 0.0, f1p_0 = 1.0;
  int steps = 1000;
};

struct RuledTypeCParams {
  Expr x, y, z;
};

using FamilyParams =
    std::variant<StandardParams, AffineParams, Type3Params, Type4Params, ConstantKParams,
                 CmcCylinderParams, ParabolicRuledParams, Type3CircleParams, Type4CmcOdeParams,
                 RuledTypeCParams>;

/// Closed-form data per family shape.
struct AffineForm {
  AffineMatrix A;
  Expr f, g;
};
struct Type3Form {
  Expr f1, f2, g1, g2;
};
struct Type4Form {
  Expr f1, f2, g;
  double a = 0.0;
};
struct IsotropicProfileForm {  // (u, p(s), c u^2 / 2 + q(s))
  double c = 1.0;
  Expr p, q;
};
using ClosedForm = std::variant<std::monostate, AffineForm, Type3Form, Type4Form, IsotropicProfileForm>;

/// Numerical solution carried by the type-4 constant-mean-curvature family.
struct CmcOdeSolution {
  SecondOrderTrajectory trajectory;
  std::shared_ptr<const CubicHermite> f1;
  /// The constant C in H0 sgn(f2' - a) (f2 - a u) - sigma / sqrt(1 + sigma^2) = C,
  /// fixed from the initial data.
  double integration_constant = 0.0;
  /// min over interior nodes of |f1'' f2''' - f1''' f2''| with f1''' from
  /// central differences of the f1'' samples.
  double min_torsion_indicator = 0.0;
};

class SurfaceFamily {
 public:
  SurfaceFamily(FamilyKind kind, FamilyParams params, Surface surface, ClosedForm form)
      : kind_(kind), params_(std::move(params)), surface_(std::move(surface)), form_(std::move(form)) {}

  FamilyKind kind() const { return kind_; }
  const FamilyParams& params() const { return params_; }
  const Surface& surface() const { return surface_; }
  const ClosedForm& closed_form() const { return form_; }

  /// Closed-form curvatures at the surface parameters, when the family has one.
  std::optional<double> closed_form_K(double u, double v) const;
  std::optional<double> closed_form_H(double u, double v) const;

  /// Affine families: which translating curve is isotropic (a22 = 0 makes
  /// alpha isotropic, a12 = 0 makes beta isotropic).
  bool alpha_isotropic() const { return alpha_isotropic_; }
  bool beta_isotropic() const { return beta_isotropic_; }

  /// The isotropic translating curve (0, p, q) for constantK_type1, type3
  /// and type3_circle.
  const std::optional<Curve>& isotropic_curve() const { return isotropic_curve_; }
  const std::shared_ptr<const CmcOdeSolution>& ode_solution() const { return ode_; }

  SurfaceFamily with_isotropy(bool alpha, bool beta) && {
    alpha_isotropic_ = alpha;
    beta_isotropic_ = beta;
    return std::move(*this);
  }
  SurfaceFamily with_isotropic_curve(Curve c) && {
    isotropic_curve_ = std::move(c);
    return std::move(*this);
  }
  SurfaceFamily with_ode(std::shared_ptr<const CmcOdeSolution> ode) && {
    ode_ = std::move(ode);
    return std::move(*this);
  }

 private:
  FamilyKind kind_;
  FamilyParams params_;
  Surface surface_;
  ClosedForm form_;
  bool alpha_isotropic_ = false;
  bool beta_isotropic_ = false;
  std::optional<Curve> isotropic_curve_;
  std::shared_ptr<const CmcOdeSolution> ode_;
};

// -- constructors --------------------------------------------------------------
// Every constructor checks admissibility on a 21x21 grid of its domain.
// Validation failures throw PreconditionError; a vanishing W found during
// construction throws DegenerateError.

SurfaceFamily make_standard(const StandardParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_affine(const AffineParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_constant_K_type1(const ConstantKParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_cmc_cylinder(const CmcCylinderParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_parabolic_ruled(const ParabolicRuledParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_type3(const Type3Params& p, std::optional<Domain> domain = {});
SurfaceFamily make_type3_circle(const Type3CircleParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_type4(const Type4Params& p, std::optional<Domain> domain = {});
SurfaceFamily make_type4_cmc_ode(const Type4CmcOdeParams& p, std::optional<Domain> domain = {});
SurfaceFamily make_ruled_type_C(const RuledTypeCParams& p, std::optional<Domain> domain = {});

/// Dispatches on the parameter alternative.
SurfaceFamily make_family(const FamilyParams& p, std::optional<Domain> domain = {});

/// Default domain a constructor picks for these parameters.
Domain default_domain(const FamilyParams& p);

// -- closed forms ---------------------------------------------------------------

double closed_form_K_affine(const AffineMatrix& A, const Expr& f, const Expr& g, double x, double y);
double closed_form_H_affine(const AffineMatrix& A, const Expr& f, const Expr& g, double x, double y);
double closed_form_K_type3(const Expr& f1, const Expr& f2, const Expr& g1, const Expr& g2, double u,
                           double v);
double closed_form_H_type3(const Expr& g1, const Expr& g2, double v);
double closed_form_K_type4(const Expr& f1, const Expr& f2, const Expr& g, double a, double u, double v);
double closed_form_H_type4(const Expr& f1, const Expr& f2, const Expr& g, double a, double u, double v);
/// K = f'' q'' for the isotropic-profile parametrization.
double closed_form_K_isotropic_profile(double c, const Expr& q, double s);

// -- family-specific certificates ------------------------------------------------

/// max over the v-grid of |a22^2 g'' / [1 + (a12 f' + a22 g')^2]^{3/2} - H0|
/// for a constant-mean-curvature cylinder.
double cmc_profile_residual(const CmcCylinderParams& p, const Domain& domain,
                            int samples = kValidationSamples);

struct CircleCheck {
  double radius_residual = 0.0;  // max | |(g1, g2)| - 1/|H0| |
  double ode_residual = 0.0;     // max |g_i''' + H0^2 g_i'|
};
CircleCheck type3_circle_check(const Type3CircleParams& p, const Domain& domain,
                               int samples = kValidationSamples);

/// max over RK4 nodes of the deviation of
/// H0 sgn(f2' - a) (f2 - a u) - sigma / sqrt(1 + sigma^2) from its initial value,
/// sigma = (f1' - c1) / (f2' - a).
double cmc_ode_identity_residual(const Type4CmcOdeParams& p, const CmcOdeSolution& sol);

/// |f1(u_end) with `steps`| - f1(u_end) with 2 * steps|.
double cmc_ode_step_halving_drift(const Type4CmcOdeParams& p);

/// Integrates the type-4 constant-mean-curvature ODE without building a surface.
CmcOdeSolution solve_cmc_ode(const Type4CmcOdeParams& p);

/// The parabolic ruled surface written as a ruled surface of type C: rotate
/// by `motion` and substitute v -> -y to land on make_ruled_type_C(result).
struct TypeCForm {
  GalileanMotion motion;
  double quadratic = 0.0;  // x(u) = quadratic * u^2
  double ruling = 0.0;     // y(u) = ruling * u, z(u) = 1
};
TypeCForm parabolic_ruled_as_type_c(const ParabolicRuledParams& p);

}  // namespace galileo
