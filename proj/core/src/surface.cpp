#include "galileo/surface.hpp"

#include <algorithm>
#include <cmath>

#include "galileo/error.hpp"
#include "format.hpp"

namespace galileo {

namespace {

bool finite_interval(const Interval& i) {
  return std::isfinite(i.lo) && std::isfinite(i.hi) && i.lo < i.hi;
}

}  // namespace

Surface::Surface(Expr x, Expr y, Expr z, Domain domain)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), domain_(domain) {
  if (x_.arity() != 2 || y_.arity() != 2 || z_.arity() != 2) {
    throw PreconditionError("surface coordinates must be functions of two variables");
  }
  if (y_.variables() != x_.variables() || z_.variables() != x_.variables()) {
    throw PreconditionError("surface coordinates must share one variable pair");
  }
  if (!finite_interval(domain_.u) || !finite_interval(domain_.v)) {
    throw PreconditionError("surface domain must be a finite rectangle with lo < hi");
  }
}

Surface Surface::parse(std::string_view x, std::string_view y, std::string_view z,
                       const std::array<std::string, 2>& variables, Domain domain) {
  const std::vector<std::string> vars(variables.begin(), variables.end());
  return Surface(Expr::parse(x, vars), Expr::parse(y, vars), Expr::parse(z, vars), domain);
}

Point3 Surface::point(double u, double v) const {
  const double at[] = {u, v};
  return {evaluate(x_, at), evaluate(y_, at), evaluate(z_, at)};
}

std::array<Jet2, 3> Surface::jets(double u, double v) const {
  const std::array<Jet2, 2> at{Jet2::seed_u(u), Jet2::seed_v(v)};
  return {eval_jet2(x_, at), eval_jet2(y_, at), eval_jet2(z_, at)};
}

Surface Surface::transformed(const GalileanMotion& m) const {
  const double cs = std::cos(m.theta), sn = std::sin(m.theta);
  return Surface(m.a + x_, m.b + m.c * x_ + cs * y_ + sn * z_, m.d + m.e * x_ - sn * y_ + cs * z_,
                 domain_);
}

int FundamentalData::epsilon(double du1, double du2) const {
  const double scale = std::max({std::abs(g1 * du1), std::abs(g2 * du2), 1.0});
  return std::abs(g1 * du1 + g2 * du2) <= kAdmissibleTolerance * scale ? 1 : 0;
}

double FundamentalData::first_form(double du1, double du2) const {
  const double lin = g1 * du1 + g2 * du2;
  return lin * lin + epsilon(du1, du2) * (h11 * du1 * du1 + 2.0 * h12 * du1 * du2 + h22 * du2 * du2);
}

FundamentalData fundamental_from_partials(const std::array<Jet2, 3>& xyz, SecondFormBranch branch) {
  const Jet2& x = xyz[0];
  const Jet2& y = xyz[1];
  const Jet2& z = xyz[2];

  FundamentalData fd;
  fd.g1 = x.c10;
  fd.g2 = x.c01;
  if (std::max(std::abs(fd.g1), std::abs(fd.g2)) <= kAdmissibleTolerance) {
    throw DegenerateError("inadmissible point: Euclidean tangent plane (x_,1 = x_,2 = 0)");
  }
  fd.h11 = y.c10 * y.c10 + z.c10 * z.c10;
  fd.h12 = y.c10 * y.c01 + z.c10 * z.c01;
  fd.h22 = y.c01 * y.c01 + z.c01 * z.c01;

  const double ny = -x.c10 * z.c01 + x.c01 * z.c10;
  const double nz = x.c10 * y.c01 - x.c01 * y.c10;
  fd.W = std::hypot(ny, nz);
  if (!(fd.W > kDegenerateW)) {
    throw DegenerateError("degenerate normal: W = " + detail::fmt(fd.W));
  }
  fd.N = {0.0, ny / fd.W, nz / fd.W};

  if (branch == SecondFormBranch::automatic) {
    branch = std::abs(fd.g1) >= std::abs(fd.g2) ? SecondFormBranch::g1 : SecondFormBranch::g2;
  }
  const bool first = branch == SecondFormBranch::g1;
  const double gk = first ? fd.g1 : fd.g2;
  const double yk = first ? y.c10 : y.c01;
  const double zk = first ? z.c10 : z.c01;
  if (gk == 0.0) throw DegenerateError("second fundamental form branch divides by g_i = 0");
  fd.branch = first ? 1 : 2;

  // L_ij = (g_k (0, y_ij, z_ij) - x_ij (0, y_k, z_k)) . N / g_k
  auto L = [&](double xij, double yij, double zij) {
    return ((gk * yij - xij * yk) * fd.N.y + (gk * zij - xij * zk) * fd.N.z) / gk;
  };
  fd.L11 = L(x.c20, y.c20, z.c20);
  fd.L12 = L(x.c11, y.c11, z.c11);
  fd.L22 = L(x.c02, y.c02, z.c02);
  return fd;
}

FundamentalData fundamental(const Surface& s, double u, double v, SecondFormBranch branch) {
  return fundamental_from_partials(s.jets(u, v), branch);
}

Curvatures curvatures_from(const FundamentalData& fd) {
  const double w2 = fd.W * fd.W;
  Curvatures c;
  c.K = (fd.L11 * fd.L22 - fd.L12 * fd.L12) / w2;
  c.H_canonical =
      (fd.g2 * fd.g2 * fd.L11 - 2.0 * fd.g1 * fd.g2 * fd.L12 + fd.g1 * fd.g1 * fd.L22) / (2.0 * w2);
  c.H_paper = 2.0 * c.H_canonical;
  return c;
}

Curvatures curvatures(const Surface& s, double u, double v) {
  return curvatures_from(fundamental(s, u, v));
}

double gaussian_curvature(const Surface& s, double u, double v) { return curvatures(s, u, v).K; }

MeanCurvature mean_curvature(const Surface& s, double u, double v) {
  const Curvatures c = curvatures(s, u, v);
  return {c.H_canonical, c.H_paper};
}

std::array<Jet2, 3> fd_partials(const Surface& s, double u, double v, const FdSteps& steps) {
  std::array<Jet2, 3> out;
  const Expr* coords[] = {&s.x(), &s.y(), &s.z()};
  for (std::size_t i = 0; i < 3; ++i) {
    const Expr& e = *coords[i];
    const auto est = fd_oracle(
        [&e](double a, double b) {
          const double at[] = {a, b};
          return evaluate(e, at);
        },
        u, v, steps);
    out[i] = {est.d00, est.d10, est.d01, est.d20, est.d11, est.d02};
  }
  return out;
}

Curvatures curvatures_fd(const Surface& s, double u, double v, const FdSteps& steps) {
  return curvatures_from(fundamental_from_partials(fd_partials(s, u, v, steps)));
}

SurfaceAdmissibility is_admissible_surface(const Surface& s, int nu, int nv) {
  if (nu < 2 || nv < 2) throw PreconditionError("admissibility grid must be at least 2x2");
  const Expr& x = s.x();
  for (double u : uniform_grid(s.domain().u, nu)) {
    for (double v : uniform_grid(s.domain().v, nv)) {
      const Jet2 j = eval_jet2(x, Jet2::seed_u(u), Jet2::seed_v(v));
      if (std::max(std::abs(j.c10), std::abs(j.c01)) <= kAdmissibleTolerance) {
        return {false, std::pair{u, v}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace galileo
