#include "galileo/ode.hpp"

#include <algorithm>
#include <cmath>

#include "galileo/error.hpp"

namespace galileo {

SecondOrderTrajectory integrate_rk4(const SecondOrderRhs& rhs, double t0, double t_end, double y0,
                                    double dy0, int steps) {
  if (steps < 1) throw PreconditionError("RK4 needs at least one step");
  if (!(t_end > t0)) throw PreconditionError("RK4 interval must satisfy t0 < t_end");

  SecondOrderTrajectory out;
  out.t0 = t0;
  out.step = (t_end - t0) / steps;
  const double h = out.step;
  out.y.reserve(static_cast<std::size_t>(steps) + 1);
  out.dy.reserve(static_cast<std::size_t>(steps) + 1);
  out.d2y.reserve(static_cast<std::size_t>(steps) + 1);

  double y = y0, p = dy0;
  for (int k = 0; k <= steps; ++k) {
    const double t = k == steps ? t_end : t0 + h * k;
    const double a1 = rhs(t, y, p);
    out.y.push_back(y);
    out.dy.push_back(p);
    out.d2y.push_back(a1);
    if (k == steps) break;

    const double k1y = p, k1p = a1;
    const double k2y = p + 0.5 * h * k1p;
    const double k2p = rhs(t + 0.5 * h, y + 0.5 * h * k1y, k2y);
    const double k3y = p + 0.5 * h * k2p;
    const double k3p = rhs(t + 0.5 * h, y + 0.5 * h * k2y, k3y);
    const double k4y = p + h * k3p;
    const double k4p = rhs(t + h, y + h * k3y, k4y);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
  }
  return out;
}

CubicHermite::CubicHermite(double t0, double step, std::vector<double> values,
                           std::vector<double> slopes, std::string name)
    : t0_(t0), step_(step), values_(std::move(values)), slopes_(std::move(slopes)), name_(std::move(name)) {
  if (values_.size() < 2 || values_.size() != slopes_.size()) {
    throw PreconditionError("Hermite interpolant needs matching value/slope samples (>= 2 nodes)");
  }
  if (!(step_ > 0.0)) throw PreconditionError("Hermite interpolant needs a positive step");
}

std::array<double, 4> CubicHermite::derivatives(double t, int order) const {
  const double span = hi() - lo();
  const double slack = 1e-12 * std::max(1.0, std::abs(span));
  if (!(t >= lo() - slack && t <= hi() + slack)) {
    throw EvalError("interpolant '" + name_ + "' evaluated outside [" + std::to_string(lo()) + ", " +
                        std::to_string(hi()) + "] at " + std::to_string(t),
                    {}, {t});
  }
  const std::size_t last = values_.size() - 2;
  const double pos = (t - t0_) / step_;
  std::size_t k = pos <= 0.0 ? 0 : static_cast<std::size_t>(pos);
  k = std::min(k, last);

  const double h = step_;
  const double s = std::clamp((t - (t0_ + h * static_cast<double>(k))) / h, -slack, 1.0 + slack);
  const double y0 = values_[k], y1 = values_[k + 1];
  const double m0 = slopes_[k] * h, m1 = slopes_[k + 1] * h;

  // p(s) = y0 + m0 s + c2 s^2 + c3 s^3 on the unit interval
  const double c2 = -3.0 * y0 + 3.0 * y1 - 2.0 * m0 - m1;
  const double c3 = 2.0 * y0 - 2.0 * y1 + m0 + m1;

  std::array<double, 4> d{};
  d[0] = y0 + s * (m0 + s * (c2 + s * c3));
  if (order > 0) d[1] = (m0 + s * (2.0 * c2 + 3.0 * s * c3)) / h;
  if (order > 1) d[2] = (2.0 * c2 + 6.0 * s * c3) / (h * h);
  if (order > 2) d[3] = 6.0 * c3 / (h * h * h);
  return d;
}

}  // namespace galileo
