#include "galileo/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "galileo/error.hpp"
#include "format.hpp"

namespace galileo {

std::vector<double> uniform_grid(const Interval& range, int n) {
  if (n < 2) throw PreconditionError("a grid needs at least two samples");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = range.lo + (range.hi - range.lo) * k / (n - 1);
  }
  out.back() = range.hi;
  return out;
}

Curve::Curve(Expr x, Expr y, Expr z, Interval domain)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), domain_(domain) {
  if (x_.arity() != 1 || y_.arity() != 1 || z_.arity() != 1) {
    throw PreconditionError("curve coordinates must be functions of one variable");
  }
  if (y_.variables() != x_.variables() || z_.variables() != x_.variables()) {
    throw PreconditionError("curve coordinates must share one parameter name");
  }
  if (!std::isfinite(domain_.lo) || !std::isfinite(domain_.hi) || !(domain_.lo < domain_.hi)) {
    throw PreconditionError("curve domain must be a finite interval with lo < hi");
  }
}

Curve Curve::parse(std::string_view x, std::string_view y, std::string_view z,
                   const std::string& variable, Interval domain) {
  return Curve(Expr::parse(x, {variable}), Expr::parse(y, {variable}), Expr::parse(z, {variable}),
               domain);
}

Point3 Curve::point(double s) const {
  const double at[] = {s};
  return {evaluate(x_, at), evaluate(y_, at), evaluate(z_, at)};
}

std::array<Jet1, 3> Curve::jets(double s) const {
  const Jet1 seed = Jet1::seed(s);
  return {eval_jet1(x_, seed), eval_jet1(y_, seed), eval_jet1(z_, seed)};
}

Curve Curve::transformed(const GalileanMotion& m) const {
  const double cs = std::cos(m.theta), sn = std::sin(m.theta);
  return Curve(m.a + x_, m.b + m.c * x_ + cs * y_ + sn * z_, m.d + m.e * x_ - sn * y_ + cs * z_,
               domain_);
}

Curve Curve::shifted(double s0) const {
  const Expr t = Expr::variable(variable(), x_.variables());
  const Expr arg[] = {t - s0};
  return Curve(x_.substitute(arg), y_.substitute(arg), z_.substitute(arg),
               {domain_.lo + s0, domain_.hi + s0});
}

CurveAdmissibility is_admissible(const Curve& c, int samples) {
  const auto grid = uniform_grid(c.domain(), samples);
  auto dx = [&](double s) { return eval_jet1(c.x(), Jet1::seed(s)).c1; };
  double prev_s = grid.front();
  double prev = dx(prev_s);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double s = grid[k];
    const double d = k == 0 ? prev : dx(s);
    if (std::abs(d) <= kTangentTolerance) return {false, s};
    if (k > 0 && std::signbit(d) != std::signbit(prev)) {
      // x' changes sign between two nodes: bisect for the root
      double lo = prev_s, hi = s, flo = prev;
      for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = dx(mid);
        if (fm == 0.0) return {false, mid};
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return {false, 0.5 * (lo + hi)};
    }
    prev = d;
    prev_s = s;
  }
  return {true, std::nullopt};
}

double curvature(const Curve& c, double s) {
  const auto [x, y, z] = c.jets(s);
  if (std::abs(std::abs(x.c1) - 1.0) > kUnitSpeedTolerance) {
    throw PreconditionError("curvature needs a unit-speed admissible curve (|x'| = 1), got x' = " +
                            detail::fmt(x.c1));
  }
  return std::hypot(y.c2, z.c2);
}

double torsion(const Curve& c, double s) {
  const double kappa = curvature(c, s);
  if (kappa <= kCurvatureFloor) {
    throw DegenerateError("torsion is undefined where the curvature vanishes (s = " +
                          detail::fmt(s) + ")");
  }
  const auto [x, y, z] = c.jets(s);
  // det of the rows (x', y', z'), (x'', y'', z''), (x''', y''', z''')
  const double det = x.c1 * (y.c2 * z.c3 - z.c2 * y.c3) - y.c1 * (x.c2 * z.c3 - z.c2 * x.c3) +
                     z.c1 * (x.c2 * y.c3 - y.c2 * x.c3);
  return det / (kappa * kappa);
}

PlanarityReport classify_planarity(const Curve& c, int samples) {
  PlanarityReport r;
  r.min_abs_torsion = std::numeric_limits<double>::infinity();
  const auto grid = uniform_grid(c.domain(), samples);
  for (double s : grid) {
    if (curvature(c, s) <= kCurvatureFloor) {
      ++r.degenerate_nodes;
      continue;
    }
    const double t = std::abs(torsion(c, s));
    r.max_abs_torsion = std::max(r.max_abs_torsion, t);
    r.min_abs_torsion = std::min(r.min_abs_torsion, t);
  }
  if (r.degenerate_nodes == samples) {
    r.min_abs_torsion = 0.0;
    r.kind = Planarity::planar;
  } else if (r.max_abs_torsion < kPlanarityTolerance) {
    r.kind = Planarity::planar;
  } else if (r.degenerate_nodes == 0 && r.min_abs_torsion > kPlanarityTolerance) {
    r.kind = Planarity::space;
  } else {
    r.kind = Planarity::mixed;
  }
  return r;
}

bool is_planar(const Curve& c, int samples) {
  return classify_planarity(c, samples).kind == Planarity::planar;
}

bool is_space_curve(const Curve& c, int samples) {
  return classify_planarity(c, samples).kind == Planarity::space;
}

UnitSpeedReport check_isotropic_unit_speed(const Curve& c, int samples) {
  UnitSpeedReport r;
  for (double s : uniform_grid(c.domain(), samples)) {
    const auto [x, p, q] = c.jets(s);
    if (std::abs(x.c0) > kTangentTolerance || std::abs(x.c1) > kTangentTolerance) {
      throw PreconditionError("curve is not isotropic: x is not identically zero (s = " +
                              detail::fmt(s) + ")");
    }
    r.max_residual = std::max(r.max_residual, std::abs(p.c1 * p.c1 + q.c1 * q.c1 - 1.0));
    r.max_identity_residual = std::max(r.max_identity_residual, std::abs(p.c1 * p.c2 + q.c1 * q.c2));
  }
  r.unit_speed = r.max_residual < kUnitSpeedTolerance && r.max_identity_residual < kUnitSpeedTolerance;
  return r;
}

}  // namespace galileo
