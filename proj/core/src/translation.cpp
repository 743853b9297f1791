#include "galileo/translation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "galileo/error.hpp"
#include "format.hpp"

namespace galileo {

namespace {

using detail::fmt;

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kUV = {"u", "v"};
const std::vector<std::string> kUS = {"u", "s"};

constexpr std::array<std::string_view, 11> kFamilyNames = {
    "type1_2_standard", "affine",          "type3",        "type4",
    "constantK_type1",  "cmc_cylinder_B_i", "cmc_cylinder_B_ii_1",
    "parabolic_ruled",  "type3_circle",    "type4_cmc_ode", "ruled_type_C"};

void require_univariate(const Expr& e, const char* what) {
  if (e.arity() != 1) {
    throw PreconditionError(std::string(what) + " must be a function of one variable");
  }
}

Jet1 jet(const Expr& f, double t) { return eval_jet1(f, Jet1::seed(t)); }

/// f(arg) for a univariate f.
Expr at(const Expr& f, const Expr& arg) {
  const Expr args[] = {arg};
  return f.substitute(args);
}

Expr var(const char* name, const std::vector<std::string>& vars) { return Expr::variable(name, vars); }

void require_admissible(const Surface& s) {
  const auto adm = is_admissible_surface(s, kValidationGrid, kValidationGrid);
  if (!adm.admissible) {
    throw PreconditionError("surface has a Euclidean tangent plane at (" + fmt(adm.witness->first) +
                            ", " + fmt(adm.witness->second) + ")");
  }
}

Domain pick(const std::optional<Domain>& given, const FamilyParams& p) {
  return given ? *given : default_domain(p);
}

/// min over the u-grid of |f1'' f2''' - f1''' f2''| (nonzero iff the curve
/// (u, f1, f2) has nonvanishing torsion).
void require_space_curve(const Expr& f1, const Expr& f2, const Interval& range) {
  double worst = std::numeric_limits<double>::infinity();
  double where = range.lo;
  for (double u : uniform_grid(range, kValidationSamples)) {
    const Jet1 a = jet(f1, u), b = jet(f2, u);
    const double t = std::abs(a.c2 * b.c3 - a.c3 * b.c2);
    if (t < worst) worst = t, where = u;
  }
  if (!(worst > kTorsionCheckFloor)) {
    throw PreconditionError("translating curve (u, f1, f2) is not a space curve: "
                            "f1'' f2''' - f1''' f2'' = " + fmt(worst) + " at u = " + fmt(where));
  }
}

SurfaceFamily affine_family(FamilyKind kind, FamilyParams params, const AffineMatrix& A,
                            const Expr& f, const Expr& g, const Domain& domain) {
  A.validate();
  require_univariate(f, "f");
  require_univariate(g, "g");
  const Expr x = var("x", kXY), y = var("y", kXY);
  const Expr z = at(f, A.a11 * x + A.a12 * y) + at(g, A.a21 * x + A.a22 * y);
  Surface s(x, y, z, domain);
  require_admissible(s);
  return SurfaceFamily(kind, std::move(params), std::move(s), AffineForm{A, f, g})
      .with_isotropy(A.a22 == 0.0, A.a12 == 0.0);
}

struct Type4Options {
  bool check_torsion = true;
};

SurfaceFamily type4_family(FamilyKind kind, FamilyParams params, const Expr& f1, const Expr& f2,
                           const Expr& g, double a, const Domain& domain, Type4Options opt) {
  require_univariate(f1, "f1");
  require_univariate(f2, "f2");
  require_univariate(g, "g");
  if (opt.check_torsion) require_space_curve(f1, f2, domain.u);
  for (double u : uniform_grid(domain.u, kValidationGrid)) {
    const Jet1 j1 = jet(f1, u), j2 = jet(f2, u);
    for (double v : uniform_grid(domain.v, kValidationGrid)) {
      const double w = std::hypot(j2.c1 - a, j1.c1 - jet(g, v).c1);
      if (!(w > kDegenerateW)) {
        throw DegenerateError("type-4 surface has W = " + fmt(w) + " at (u, v) = (" + fmt(u) + ", " +
                              fmt(v) + ")");
      }
    }
  }
  const Expr u = var("u", kUV), v = var("v", kUV);
  Surface s(u + v, at(f1, u) + at(g, v), at(f2, u) + a * v, domain);
  require_admissible(s);
  return SurfaceFamily(kind, std::move(params), std::move(s), Type4Form{f1, f2, g, a});
}

SurfaceFamily type3_family(FamilyKind kind, FamilyParams params, const Expr& f1, const Expr& f2,
                           const Expr& g1, const Expr& g2, const Domain& domain) {
  require_univariate(f1, "f1");
  require_univariate(f2, "f2");
  require_univariate(g1, "g1");
  require_univariate(g2, "g2");
  if (g1.variables() != g2.variables()) {
    throw PreconditionError("g1 and g2 must share their parameter name");
  }
  const Curve beta(Expr::constant(0.0, g1.variables()), g1, g2, domain.v);
  const UnitSpeedReport speed = check_isotropic_unit_speed(beta, kValidationSamples);
  if (!speed.unit_speed) {
    throw PreconditionError("translating isotropic curve (0, g1, g2) is not unit speed: residual " +
                            fmt(std::max(speed.max_residual, speed.max_identity_residual)));
  }
  require_space_curve(f1, f2, domain.u);
  for (double v : uniform_grid(domain.v, kValidationSamples)) {
    if (!(std::abs(jet(g1, v).c1) > kTorsionCheckFloor)) {
      throw PreconditionError("g1' vanishes at v = " + fmt(v));
    }
  }
  const Expr u = var("u", kUV), v = var("v", kUV);
  Surface s(u, at(f1, u) + at(g1, v), at(f2, u) + at(g2, v), domain);
  require_admissible(s);
  return SurfaceFamily(kind, std::move(params), std::move(s), Type3Form{f1, f2, g1, g2})
      .with_isotropic_curve(beta);
}

Domain cmc_default_domain(const CmcCylinderParams& p) {
  const double R = kDomainShrink * std::abs(p.A.a22 / p.H0);
  double X = 1.0;
  if (p.A.a21 != 0.0) X = std::min(1.0, R / (2.0 * std::abs(p.A.a21)));
  const double Y = (R - std::abs(p.A.a21) * X) / std::abs(p.A.a22);
  return {{-X, X}, {-Y, Y}};
}

}  // namespace

void AffineMatrix::validate() const {
  if (!std::isfinite(a11) || !std::isfinite(a12) || !std::isfinite(a21) || !std::isfinite(a22) ||
      !(std::abs(w()) > 1e-12)) {
    throw PreconditionError("matrix A is singular (det = " + fmt(w()) + ")");
  }
}

std::string_view name_of(FamilyKind kind) { return kFamilyNames[static_cast<std::size_t>(kind)]; }

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<FamilyKind>(i);
  }
  return std::nullopt;
}

Domain default_domain(const FamilyParams& params) {
  return std::visit(
      [](const auto& p) -> Domain {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ConstantKParams>) {
          if (p.K0 == 0.0 || p.c == 0.0) return {};
          const double s = kDomainShrink * std::abs(p.c / p.K0);
          return {{-1.0, 1.0}, {-s, s}};
        } else if constexpr (std::is_same_v<P, CmcCylinderParams>) {
          if (p.H0 == 0.0 || p.A.a22 == 0.0) return {};
          return cmc_default_domain(p);
        } else if constexpr (std::is_same_v<P, Type3Params> || std::is_same_v<P, Type4Params>) {
          return {{0.5, 2.0}, {-1.0, 1.0}};
        } else if constexpr (std::is_same_v<P, Type3CircleParams>) {
          const double r = p.H0 != 0.0 ? 1.0 / std::abs(p.H0) : 1.0;
          return {{0.5, 2.0}, {-r, r}};
        } else if constexpr (std::is_same_v<P, Type4CmcOdeParams>) {
          return {{p.u0, p.u_end}, {-1.0, 1.0}};
        } else {
          return {};
        }
      },
      params);
}

// -- constructors ---------------------------------------------------------------

SurfaceFamily make_standard(const StandardParams& p, std::optional<Domain> domain) {
  require_univariate(p.f, "f");
  require_univariate(p.g, "g");
  const Domain d = pick(domain, p);
  const Expr x = var("x", kXY), y = var("y", kXY);
  if (p.type == 1) {
    Surface s(x, y, at(p.f, x) + at(p.g, y), d);
    require_admissible(s);
    return SurfaceFamily(FamilyKind::type1_2_standard, p, std::move(s),
                         AffineForm{AffineMatrix::identity(), p.f, p.g})
        .with_isotropy(false, true);
  }
  if (p.type == 2) {
    Surface s(x + y, at(p.g, y), at(p.f, x), d);
    require_admissible(s);
    // (x + y, g(y), f(x)) is the type-4 shape with f1 = 0, f2 = f, a = 0
    return SurfaceFamily(FamilyKind::type1_2_standard, p, std::move(s),
                         Type4Form{Expr::constant(0.0, p.f.variables()), p.f, p.g, 0.0});
  }
  throw PreconditionError("standard translation surface type must be 1 or 2");
}

SurfaceFamily make_affine(const AffineParams& p, std::optional<Domain> domain) {
  return affine_family(FamilyKind::affine, p, p.A, p.f, p.g, pick(domain, p));
}

SurfaceFamily make_constant_K_type1(const ConstantKParams& p, std::optional<Domain> domain) {
  if (p.K0 == 0.0 || !std::isfinite(p.K0)) throw PreconditionError("K0 must be a nonzero real");
  if (p.c == 0.0 || !std::isfinite(p.c)) throw PreconditionError("c must be a nonzero real");
  const Domain d = pick(domain, p);
  const double limit = std::abs(p.c / p.K0);
  if (!(std::max(std::abs(d.v.lo), std::abs(d.v.hi)) < limit)) {
    throw PreconditionError("arc-length domain must satisfy |s| < |c / K0| = " + fmt(limit));
  }

  // beta(s) = (0, p(s), q(s)) with q'' = K0 / c and p' = sqrt(1 - q'^2)
  const std::vector<std::string> sv = {"s"};
  const double k = p.K0 / p.c;
  const Expr s = var("s", sv);
  const Expr ks = k * s;
  const Expr prof_p =
      (0.5 * s) * call(Elementary::sqrt, 1.0 - pow(ks, 2.0)) + (0.5 / k) * call(Elementary::asin, ks);
  const Expr prof_q = (p.K0 / (2.0 * p.c)) * pow(s, 2.0);

  const Expr u = var("u", kUS), s2 = var("s", kUS);
  Surface surf(u, at(prof_p, s2), (0.5 * p.c) * pow(u, 2.0) + at(prof_q, s2), d);
  require_admissible(surf);
  Curve beta(Expr::constant(0.0, sv), prof_p, prof_q, d.v);
  return SurfaceFamily(FamilyKind::constantK_type1, p, std::move(surf),
                       IsotropicProfileForm{p.c, prof_p, prof_q})
      .with_isotropy(false, true)
      .with_isotropic_curve(std::move(beta));
}

SurfaceFamily make_cmc_cylinder(const CmcCylinderParams& p, std::optional<Domain> domain) {
  if (p.H0 == 0.0 || !std::isfinite(p.H0)) throw PreconditionError("H0 must be a nonzero real");
  p.A.validate();
  if (p.A.a22 == 0.0) throw PreconditionError("constant mean curvature cylinder needs a22 != 0");
  if (p.variant == CmcVariant::B_i && p.A.a12 != 0.0) {
    throw PreconditionError("variant B_i needs a12 = 0 (isotropic beta)");
  }
  const Domain d = pick(domain, p);
  for (double x : {d.u.lo, d.u.hi}) {
    for (double y : {d.v.lo, d.v.hi}) {
      const double arg = p.H0 * (p.A.a21 * x + p.A.a22 * y) / p.A.a22;
      if (!(std::abs(arg) < 1.0)) {
        throw PreconditionError("domain leaves |H0 v / a22| < 1 at (" + fmt(x) + ", " + fmt(y) + ")");
      }
    }
  }

  const std::vector<std::string> vv = {"v"};
  const Expr v = var("v", vv);
  Expr g = (-1.0 / p.H0) * call(Elementary::sqrt, 1.0 - pow((p.H0 / p.A.a22) * v, 2.0));
  Expr f = Expr::constant(0.0, {"u"});
  FamilyKind kind = FamilyKind::cmc_cylinder_B_i;
  if (p.variant == CmcVariant::B_i) {
    if (p.f) {
      require_univariate(*p.f, "f");
      f = *p.f;
    }
  } else {
    kind = FamilyKind::cmc_cylinder_B_ii_1;
    f = p.c1 * var("u", {"u"});
    g = g - (p.c1 * p.A.a12 / p.A.a22) * v;
  }
  return affine_family(kind, p, p.A, f, g, d);
}

SurfaceFamily make_parabolic_ruled(const ParabolicRuledParams& p, std::optional<Domain> domain) {
  p.A.validate();
  if (p.A.a12 == 0.0 || p.A.a22 == 0.0) {
    throw PreconditionError("parabolic ruled surface needs a12 != 0 and a22 != 0");
  }
  const Expr u = var("u", {"u"});
  const Expr v = var("v", {"v"});
  const Expr f = (p.c1 / (2.0 * p.A.a12 * p.A.a12)) * pow(u, 2.0);
  const Expr g = (-p.c1 / (2.0 * p.A.a22 * p.A.a22)) * pow(v, 2.0);
  return affine_family(FamilyKind::parabolic_ruled, p, p.A, f, g, pick(domain, p));
}

SurfaceFamily make_type3(const Type3Params& p, std::optional<Domain> domain) {
  return type3_family(FamilyKind::type3, p, p.f1, p.f2, p.g1, p.g2, pick(domain, p));
}

SurfaceFamily make_type3_circle(const Type3CircleParams& p, std::optional<Domain> domain) {
  if (p.H0 == 0.0 || !std::isfinite(p.H0)) throw PreconditionError("H0 must be a nonzero real");
  const double h = std::abs(p.H0);
  const std::vector<std::string> vv = {"v"};
  const Expr v = var("v", vv);
  const Expr g1 = call(Elementary::sin, h * v) / h;
  const Expr g2 = call(Elementary::cos, h * v) / h;
  return type3_family(FamilyKind::type3_circle, p, p.f1, p.f2, g1, g2, pick(domain, p));
}

SurfaceFamily make_type4(const Type4Params& p, std::optional<Domain> domain) {
  return type4_family(FamilyKind::type4, p, p.f1, p.f2, p.g, p.a, pick(domain, p), {});
}

CmcOdeSolution solve_cmc_ode(const Type4CmcOdeParams& p) {
  if (p.H0 == 0.0 || !std::isfinite(p.H0)) throw PreconditionError("H0 must be a nonzero real");
  if (p.steps < 100) throw PreconditionError("the CMC ODE needs at least 100 steps");
  if (!(p.u0 < p.u_end)) throw PreconditionError("the CMC ODE needs u0 < u_end");
  require_univariate(p.f2, "f2");

  const double d0 = jet(p.f2, p.u0).c1 - p.a;
  if (!(std::abs(d0) > 1e-6)) throw PreconditionError("f2' - a vanishes at u0");
  const bool positive = d0 > 0.0;

  auto rhs = [&](double t, double, double f1p) {
    const Jet1 j = jet(p.f2, t);
    const double d = j.c1 - p.a;
    if (!(std::abs(d) > 1e-6) || (d > 0.0) != positive) {
      throw PreconditionError("f2' - a crosses zero at u = " + fmt(t));
    }
    const double e = f1p - p.c1;
    const double w = std::hypot(d, e);
    return (p.H0 * w * w * w + e * j.c2) / d;
  };

  CmcOdeSolution sol;
  sol.trajectory = integrate_rk4(rhs, p.u0, p.u_end, p.f1_0, p.f1p_0, p.steps);
  const auto& tr = sol.trajectory;
  sol.f1 = std::make_shared<CubicHermite>(tr.t0, tr.step, tr.y, tr.dy, "f1");

  const double sigma0 = (p.f1p_0 - p.c1) / d0;
  const double f2u0 = evaluate(p.f2, std::array{p.u0});
  sol.integration_constant =
      p.H0 * (positive ? 1.0 : -1.0) * (f2u0 - p.a * p.u0) - sigma0 / std::sqrt(1.0 + sigma0 * sigma0);

  double worst = std::numeric_limits<double>::infinity();
  double where = p.u0;
  for (std::size_t k = 1; k + 1 < tr.size(); ++k) {
    const double f1ppp = (tr.d2y[k + 1] - tr.d2y[k - 1]) / (2.0 * tr.step);
    const Jet1 j = jet(p.f2, tr.t(k));
    const double t = std::abs(tr.d2y[k] * j.c3 - f1ppp * j.c2);
    if (t < worst) worst = t, where = tr.t(k);
  }
  sol.min_torsion_indicator = worst;
  if (!(worst > kTorsionCheckFloor)) {
    throw PreconditionError("numerical f1 does not give a space curve: f1'' f2''' - f1''' f2'' = " +
                            fmt(worst) + " at u = " + fmt(where));
  }
  return sol;
}

SurfaceFamily make_type4_cmc_ode(const Type4CmcOdeParams& p, std::optional<Domain> domain) {
  auto sol = std::make_shared<const CmcOdeSolution>(solve_cmc_ode(p));
  const Domain d = pick(domain, p);
  if (d.u.lo < p.u0 || d.u.hi > p.u_end) {
    throw PreconditionError("u-domain must lie inside the integration interval [u0, u_end]");
  }
  const Expr f1 = galileo::apply(sol->f1, var("u", {"u"}));
  const Expr g = p.c1 * var("v", {"v"});
  return type4_family(FamilyKind::type4_cmc_ode, p, f1, p.f2, g, p.a, d, {.check_torsion = false})
      .with_ode(std::move(sol));
}

SurfaceFamily make_ruled_type_C(const RuledTypeCParams& p, std::optional<Domain> domain) {
  require_univariate(p.x, "x");
  require_univariate(p.y, "y");
  require_univariate(p.z, "z");
  const Expr u = var("u", kUV), v = var("v", kUV);
  Surface s(u, at(p.x, u) + v * at(p.y, u), v * at(p.z, u), pick(domain, p));
  require_admissible(s);
  return SurfaceFamily(FamilyKind::ruled_type_C, p, std::move(s), std::monostate{});
}

SurfaceFamily make_family(const FamilyParams& params, std::optional<Domain> domain) {
  return std::visit(
      [&](const auto& p) -> SurfaceFamily {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, StandardParams>) return make_standard(p, domain);
        else if constexpr (std::is_same_v<P, AffineParams>) return make_affine(p, domain);
        else if constexpr (std::is_same_v<P, Type3Params>) return make_type3(p, domain);
        else if constexpr (std::is_same_v<P, Type4Params>) return make_type4(p, domain);
        else if constexpr (std::is_same_v<P, ConstantKParams>) return make_constant_K_type1(p, domain);
        else if constexpr (std::is_same_v<P, CmcCylinderParams>) return make_cmc_cylinder(p, domain);
        else if constexpr (std::is_same_v<P, ParabolicRuledParams>) return make_parabolic_ruled(p, domain);
        else if constexpr (std::is_same_v<P, Type3CircleParams>) return make_type3_circle(p, domain);
        else if constexpr (std::is_same_v<P, Type4CmcOdeParams>) return make_type4_cmc_ode(p, domain);
        else return make_ruled_type_C(p, domain);
      },
      params);
}

// -- closed forms -----------------------------------------------------------------

double closed_form_K_affine(const AffineMatrix& A, const Expr& f, const Expr& g, double x, double y) {
  const Jet1 F = jet(f, A.a11 * x + A.a12 * y);
  const Jet1 G = jet(g, A.a21 * x + A.a22 * y);
  const double slope = A.a12 * F.c1 + A.a22 * G.c1;
  const double bracket = 1.0 + slope * slope;
  return A.w() * A.w() * F.c2 * G.c2 / (bracket * bracket);
}

double closed_form_H_affine(const AffineMatrix& A, const Expr& f, const Expr& g, double x, double y) {
  const Jet1 F = jet(f, A.a11 * x + A.a12 * y);
  const Jet1 G = jet(g, A.a21 * x + A.a22 * y);
  const double slope = A.a12 * F.c1 + A.a22 * G.c1;
  const double bracket = 1.0 + slope * slope;
  return (A.a12 * A.a12 * F.c2 + A.a22 * A.a22 * G.c2) / (bracket * std::sqrt(bracket));
}

double closed_form_K_type3(const Expr& f1, const Expr& f2, const Expr& g1, const Expr& g2, double u,
                           double v) {
  const Jet1 F1 = jet(f1, u), F2 = jet(f2, u), G1 = jet(g1, v), G2 = jet(g2, v);
  if (!(std::abs(G1.c1) > kTorsionCheckFloor)) throw DegenerateError("g1' vanishes at v = " + fmt(v));
  return -(G2.c2 / G1.c1) * (F1.c2 * G2.c1 - F2.c2 * G1.c1);
}

double closed_form_H_type3(const Expr& g1, const Expr& g2, double v) {
  const Jet1 G1 = jet(g1, v), G2 = jet(g2, v);
  if (!(std::abs(G1.c1) > kTorsionCheckFloor)) throw DegenerateError("g1' vanishes at v = " + fmt(v));
  return G2.c2 / G1.c1;
}

double closed_form_K_type4(const Expr& f1, const Expr& f2, const Expr& g, double a, double u, double v) {
  const Jet1 F1 = jet(f1, u), F2 = jet(f2, u), G = jet(g, v);
  const double D = F2.c1 - a, E = F1.c1 - G.c1;
  const double w2 = D * D + E * E;
  if (!(w2 > kDegenerateW * kDegenerateW)) throw DegenerateError("type-4 W vanishes");
  return G.c2 * (F1.c2 * D * D - F2.c2 * D * E) / (w2 * w2);
}

double closed_form_H_type4(const Expr& f1, const Expr& f2, const Expr& g, double a, double u, double v) {
  const Jet1 F1 = jet(f1, u), F2 = jet(f2, u), G = jet(g, v);
  const double D = F2.c1 - a, E = F1.c1 - G.c1;
  const double w2 = D * D + E * E;
  if (!(w2 > kDegenerateW * kDegenerateW)) throw DegenerateError("type-4 W vanishes");
  return (D * G.c2 + D * F1.c2 - E * F2.c2) / (w2 * std::sqrt(w2));
}

double closed_form_K_isotropic_profile(double c, const Expr& q, double s) { return c * jet(q, s).c2; }

std::optional<double> SurfaceFamily::closed_form_K(double u, double v) const {
  return std::visit(
      [&](const auto& f) -> std::optional<double> {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AffineForm>) return closed_form_K_affine(f.A, f.f, f.g, u, v);
        else if constexpr (std::is_same_v<F, Type3Form>) return closed_form_K_type3(f.f1, f.f2, f.g1, f.g2, u, v);
        else if constexpr (std::is_same_v<F, Type4Form>) return closed_form_K_type4(f.f1, f.f2, f.g, f.a, u, v);
        else if constexpr (std::is_same_v<F, IsotropicProfileForm>) return closed_form_K_isotropic_profile(f.c, f.q, v);
        else return std::nullopt;
      },
      form_);
}

std::optional<double> SurfaceFamily::closed_form_H(double u, double v) const {
  return std::visit(
      [&](const auto& f) -> std::optional<double> {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AffineForm>) return closed_form_H_affine(f.A, f.f, f.g, u, v);
        else if constexpr (std::is_same_v<F, Type3Form>) return closed_form_H_type3(f.g1, f.g2, v);
        else if constexpr (std::is_same_v<F, Type4Form>) return closed_form_H_type4(f.f1, f.f2, f.g, f.a, u, v);
        else return std::nullopt;
      },
      form_);
}

// -- certificates ------------------------------------------------------------------

double cmc_profile_residual(const CmcCylinderParams& p, const Domain& domain, int samples) {
  const SurfaceFamily fam = make_cmc_cylinder(p, domain);
  const auto& form = std::get<AffineForm>(fam.closed_form());
  // a12 f' is constant along the family (0 for B_i, a12 c1 for B_ii_1)
  const double drift = p.variant == CmcVariant::B_ii_1 ? p.A.a12 * p.c1 : 0.0;
  double worst = 0.0;
  for (double x : uniform_grid(domain.u, samples)) {
    for (double y : {domain.v.lo, 0.5 * (domain.v.lo + domain.v.hi), domain.v.hi}) {
      const Jet1 G = jet(form.g, p.A.a21 * x + p.A.a22 * y);
      const double slope = drift + p.A.a22 * G.c1;
      const double lhs = p.A.a22 * p.A.a22 * G.c2 / std::pow(1.0 + slope * slope, 1.5);
      worst = std::max(worst, std::abs(lhs - p.H0));
    }
  }
  return worst;
}

CircleCheck type3_circle_check(const Type3CircleParams& p, const Domain& domain, int samples) {
  const SurfaceFamily fam = make_type3_circle(p, domain);
  const auto& form = std::get<Type3Form>(fam.closed_form());
  const double radius = 1.0 / std::abs(p.H0);
  CircleCheck out;
  for (double v : uniform_grid(domain.v, samples)) {
    const Jet1 g1 = jet(form.g1, v), g2 = jet(form.g2, v);
    out.radius_residual = std::max(out.radius_residual, std::abs(std::hypot(g1.c0, g2.c0) - radius));
    const double h2 = p.H0 * p.H0;
    out.ode_residual = std::max({out.ode_residual, std::abs(g1.c3 + h2 * g1.c1), std::abs(g2.c3 + h2 * g2.c1)});
  }
  return out;
}

double cmc_ode_identity_residual(const Type4CmcOdeParams& p, const CmcOdeSolution& sol) {
  const auto& tr = sol.trajectory;
  double worst = 0.0;
  for (std::size_t k = 0; k < tr.size(); ++k) {
    const double u = tr.t(k);
    const Jet1 F2 = jet(p.f2, u);
    const double d = F2.c1 - p.a;
    const double sigma = (tr.dy[k] - p.c1) / d;
    const double lhs = p.H0 * (d > 0.0 ? 1.0 : -1.0) * (F2.c0 - p.a * u);
    const double rhs = sigma / std::sqrt(1.0 + sigma * sigma);
    worst = std::max(worst, std::abs(lhs - rhs - sol.integration_constant));
  }
  return worst;
}

double cmc_ode_step_halving_drift(const Type4CmcOdeParams& p) {
  Type4CmcOdeParams fine = p;
  fine.steps = 2 * p.steps;
  const double coarse_end = solve_cmc_ode(p).trajectory.y.back();
  const double fine_end = solve_cmc_ode(fine).trajectory.y.back();
  return std::abs(coarse_end - fine_end);
}

TypeCForm parabolic_ruled_as_type_c(const ParabolicRuledParams& p) {
  p.A.validate();
  if (p.A.a12 == 0.0 || p.A.a22 == 0.0) {
    throw PreconditionError("parabolic ruled surface needs a12 != 0 and a22 != 0");
  }
  const double r1 = p.A.a11 / p.A.a12, r2 = p.A.a21 / p.A.a22;
  // z = Q x^2 + P x y; rotating (y, z) by a quarter turn gives
  // (x, Q x^2 + P x y, -y) = (u, Q u^2 + t (-P u), t) with t = -y.
  TypeCForm out;
  out.motion.theta = std::numbers::pi / 2.0;
  out.quadratic = 0.5 * p.c1 * (r1 * r1 - r2 * r2);
  out.ruling = -p.c1 * (r1 - r2);
  return out;
}

}  // namespace galileo
