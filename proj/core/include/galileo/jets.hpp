#pragma once

// Truncated Taylor arithmetic. Jet1 carries a value and three derivatives of a
// function of one variable; Jet2 carries a value, the gradient and the Hessian
// of a function of two variables. Every operation applies the exact Leibniz /
// Faa di Bruno rule at that order, so derivatives are exact up to rounding.

#include <array>
#include <cmath>
#include <functional>
#include <string_view>

namespace galileo {

struct Jet1 {
  double c0 = 0.0;  // value
  double c1 = 0.0;  // d/ds
  double c2 = 0.0;  // d^2/ds^2
  double c3 = 0.0;  // d^3/ds^3

  static constexpr Jet1 constant(double x) { return {x, 0.0, 0.0, 0.0}; }
  static constexpr Jet1 seed(double x) { return {x, 1.0, 0.0, 0.0}; }

  bool is_finite() const {
    return std::isfinite(c0) && std::isfinite(c1) && std::isfinite(c2) && std::isfinite(c3);
  }
  friend bool operator==(const Jet1&, const Jet1&) = default;
};

struct Jet2 {
  double c00 = 0.0;  // value
  double c10 = 0.0;  // d/du
  double c01 = 0.0;  // d/dv
  double c20 = 0.0;  // d^2/du^2
  double c11 = 0.0;  // d^2/du dv
  double c02 = 0.0;  // d^2/dv^2

  static constexpr Jet2 constant(double x) { return {x, 0.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr Jet2 seed_u(double x) { return {x, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr Jet2 seed_v(double x) { return {x, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  bool is_finite() const {
    return std::isfinite(c00) && std::isfinite(c10) && std::isfinite(c01) &&
           std::isfinite(c20) && std::isfinite(c11) && std::isfinite(c02);
  }
  friend bool operator==(const Jet2&, const Jet2&) = default;
};

/// Elementary functions understood by the expression language.
enum class Elementary { sin, cos, tan, asin, atan, exp, log, sqrt, sinh, cosh };

std::string_view name_of(Elementary fn);
/// Returns false when `name` is not an elementary function.
bool lookup_elementary(std::string_view name, Elementary& out);

/// Value and first `order` derivatives of `fn` at x; entries above `order`
/// are zero. Throws EvalError outside the function's domain (for derivatives
/// as well as values: sqrt at 0 is fine for order 0 but not for order 1).
std::array<double, 4> elementary_derivatives(Elementary fn, double x, int order);

/// Derivatives of t -> t^p for a real exponent; requires x > 0 unless p is a
/// non-negative integer.
std::array<double, 4> power_derivatives(double x, double p, int order);

// -- chain rule --------------------------------------------------------------

/// outer(inner) given outer's derivatives d[k] = outer^(k)(inner.c0).
Jet1 chain(const std::array<double, 4>& d, const Jet1& inner);
Jet2 chain(const std::array<double, 4>& d, const Jet2& inner);

Jet1 compose(Elementary fn, const Jet1& inner);
Jet2 compose(Elementary fn, const Jet2& inner);

// -- arithmetic --------------------------------------------------------------

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
}
inline Jet1 operator-(const Jet1& a, const Jet1& b) {
  return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
}
inline Jet1 operator-(const Jet1& a) { return {-a.c0, -a.c1, -a.c2, -a.c3}; }
// Terms are paired so that a * b and b * a agree bitwise.
inline Jet1 operator*(const Jet1& a, const Jet1& b) {
  return {a.c0 * b.c0,
          a.c1 * b.c0 + a.c0 * b.c1,
          (a.c2 * b.c0 + a.c0 * b.c2) + 2.0 * (a.c1 * b.c1),
          (a.c3 * b.c0 + a.c0 * b.c3) + 3.0 * (a.c2 * b.c1 + a.c1 * b.c2)};
}
inline Jet1 operator*(double s, const Jet1& a) { return {s * a.c0, s * a.c1, s * a.c2, s * a.c3}; }
inline Jet1 operator*(const Jet1& a, double s) { return s * a; }
inline Jet1 operator+(const Jet1& a, double s) { return {a.c0 + s, a.c1, a.c2, a.c3}; }
inline Jet1 operator+(double s, const Jet1& a) { return a + s; }
inline Jet1 operator-(const Jet1& a, double s) { return {a.c0 - s, a.c1, a.c2, a.c3}; }
inline Jet1 operator-(double s, const Jet1& a) { return {s - a.c0, -a.c1, -a.c2, -a.c3}; }

/// Throws EvalError when b.c0 == 0.
Jet1 operator/(const Jet1& a, const Jet1& b);

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.c00 + b.c00, a.c10 + b.c10, a.c01 + b.c01,
          a.c20 + b.c20, a.c11 + b.c11, a.c02 + b.c02};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.c00 - b.c00, a.c10 - b.c10, a.c01 - b.c01,
          a.c20 - b.c20, a.c11 - b.c11, a.c02 - b.c02};
}
inline Jet2 operator-(const Jet2& a) { return {-a.c00, -a.c10, -a.c01, -a.c20, -a.c11, -a.c02}; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.c00 * b.c00,
          a.c10 * b.c00 + a.c00 * b.c10,
          a.c01 * b.c00 + a.c00 * b.c01,
          (a.c20 * b.c00 + a.c00 * b.c20) + 2.0 * (a.c10 * b.c10),
          (a.c11 * b.c00 + a.c00 * b.c11) + (a.c10 * b.c01 + a.c01 * b.c10),
          (a.c02 * b.c00 + a.c00 * b.c02) + 2.0 * (a.c01 * b.c01)};
}
inline Jet2 operator*(double s, const Jet2& a) {
  return {s * a.c00, s * a.c10, s * a.c01, s * a.c20, s * a.c11, s * a.c02};
}
inline Jet2 operator*(const Jet2& a, double s) { return s * a; }
inline Jet2 operator+(const Jet2& a, double s) {
  return {a.c00 + s, a.c10, a.c01, a.c20, a.c11, a.c02};
}
inline Jet2 operator+(double s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, double s) {
  return {a.c00 - s, a.c10, a.c01, a.c20, a.c11, a.c02};
}
inline Jet2 operator-(double s, const Jet2& a) {
  return {s - a.c00, -a.c10, -a.c01, -a.c20, -a.c11, -a.c02};
}

/// Throws EvalError when b.c00 == 0.
Jet2 operator/(const Jet2& a, const Jet2& b);

/// a^n by repeated multiplication (binary powering); n < 0 goes through 1/a^|n|.
Jet1 pow_int(const Jet1& a, long n);
Jet2 pow_int(const Jet2& a, long n);

// -- finite-difference oracle ------------------------------------------------

/// Central-difference estimates of a black-box function's derivatives. This is
/// deliberately independent of the jet code paths above.
struct FdSteps {
  double first = 1e-5;
  double second = 1e-5;
  double third = 1e-3;
  /// One level of Richardson extrapolation (steps h and 2h) on every
  /// estimate. Pair with larger base steps (about 1e-3, 2.5e-3 for the third
  /// derivative) for accuracy near
  /// the rounding floor.
  bool richardson = false;
};

struct FdEstimate1 {
  double d0 = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

struct FdEstimate2 {
  double d00 = 0.0, d10 = 0.0, d01 = 0.0, d20 = 0.0, d11 = 0.0, d02 = 0.0;
};

/// Steps must be positive. If `fn` throws on the stencil the exception is
/// rethrown as EvalError ("stencil leaves the function's domain").
FdEstimate1 fd_oracle(const std::function<double(double)>& fn, double at, const FdSteps& steps = {});
FdEstimate2 fd_oracle(const std::function<double(double, double)>& fn, double u, double v,
                      const FdSteps& steps = {});

}  // namespace galileo
