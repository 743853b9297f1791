#include <stdexcept>
#include <string>

#include "galileo/error.hpp"
#include "galileo/jets.hpp"

namespace galileo {

namespace {

void require_positive(const FdSteps& s) {
  if (!(s.first > 0.0) || !(s.second > 0.0) || !(s.third > 0.0)) {
    throw PreconditionError("finite-difference steps must be positive");
  }
}

// Combine estimates at step h and 2h for a scheme with O(h^2) error.
double extrapolate(double at_h, double at_2h) { return (4.0 * at_h - at_2h) / 3.0; }

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const EvalError& e) {
    throw EvalError(std::string("finite-difference stencil leaves the function's domain: ") +
                        e.what(),
                    e.subexpression(), e.point());
  }
}

}  // namespace

FdEstimate1 fd_oracle(const std::function<double(double)>& fn, double x, const FdSteps& steps) {
  require_positive(steps);
  return guarded([&] {
    const double f0 = fn(x);
    auto d1 = [&](double h) { return (fn(x + h) - fn(x - h)) / (2.0 * h); };
    auto d2 = [&](double h) { return (fn(x + h) - 2.0 * f0 + fn(x - h)) / (h * h); };
    auto d3 = [&](double h) {
      return (fn(x + 2.0 * h) - 2.0 * fn(x + h) + 2.0 * fn(x - h) - fn(x - 2.0 * h)) /
             (2.0 * h * h * h);
    };
    FdEstimate1 out;
    out.d0 = f0;
    if (steps.richardson) {
      out.d1 = extrapolate(d1(steps.first), d1(2.0 * steps.first));
      out.d2 = extrapolate(d2(steps.second), d2(2.0 * steps.second));
      out.d3 = extrapolate(d3(steps.third), d3(2.0 * steps.third));
    } else {
      out.d1 = d1(steps.first);
      out.d2 = d2(steps.second);
      out.d3 = d3(steps.third);
    }
    return out;
  });
}

FdEstimate2 fd_oracle(const std::function<double(double, double)>& fn, double u, double v,
                      const FdSteps& steps) {
  require_positive(steps);
  return guarded([&] {
    const double f0 = fn(u, v);
    auto du = [&](double h) { return (fn(u + h, v) - fn(u - h, v)) / (2.0 * h); };
    auto dv = [&](double h) { return (fn(u, v + h) - fn(u, v - h)) / (2.0 * h); };
    auto duu = [&](double h) { return (fn(u + h, v) - 2.0 * f0 + fn(u - h, v)) / (h * h); };
    auto dvv = [&](double h) { return (fn(u, v + h) - 2.0 * f0 + fn(u, v - h)) / (h * h); };
    auto duv = [&](double h) {
      return (fn(u + h, v + h) - fn(u + h, v - h) - fn(u - h, v + h) + fn(u - h, v - h)) /
             (4.0 * h * h);
    };
    auto est = [&](auto&& d, double h) {
      return steps.richardson ? extrapolate(d(h), d(2.0 * h)) : d(h);
    };
    FdEstimate2 out;
    out.d00 = f0;
    out.d10 = est(du, steps.first);
    out.d01 = est(dv, steps.first);
    out.d20 = est(duu, steps.second);
    out.d11 = est(duv, steps.second);
    out.d02 = est(dvv, steps.second);
    return out;
  });
}

}  // namespace galileo
