#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "galileo/expr.hpp"

namespace galileo {

/// Samples of a solution of y'' = F(t, y, y') on a uniform grid.
struct SecondOrderTrajectory {
  double t0 = 0.0;
  double step = 0.0;
  std::vector<double> y;
  std::vector<double> dy;
  std::vector<double> d2y;  // F evaluated at each node

  std::size_t size() const { return y.size(); }
  double t(std::size_t k) const { return t0 + step * static_cast<double>(k); }
};

using SecondOrderRhs = std::function<double(double t, double y, double dy)>;

/// Classical fixed-step RK4 on the system (y, y')' = (y', F). `steps` >= 1;
/// the last node lands on t_end exactly.
SecondOrderTrajectory integrate_rk4(const SecondOrderRhs& rhs, double t0, double t_end, double y0,
                                    double dy0, int steps);

/// Piecewise cubic Hermite interpolant through (t_k, y_k, y'_k) on a uniform
/// grid. C^1; the second derivative is piecewise linear and the third
/// piecewise constant. Evaluation outside [t_0, t_n] throws EvalError.
class CubicHermite final : public UnivariateFunction {
 public:
  CubicHermite(double t0, double step, std::vector<double> values, std::vector<double> slopes,
               std::string name = "hermite");

  std::string name() const override { return name_; }
  std::array<double, 4> derivatives(double t, int order) const override;

  double lo() const { return t0_; }
  double hi() const { return t0_ + step_ * static_cast<double>(values_.size() - 1); }

 private:
  double t0_;
  double step_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  std::string name_;
};

}  // namespace galileo
