#include "galileo/jets.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "galileo/error.hpp"

namespace galileo {

namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "sin", "cos", "tan", "asin", "atan", "exp", "log", "sqrt", "sinh", "cosh"};

[[noreturn]] void domain_error(Elementary fn, double x) {
  throw EvalError(std::string(name_of(fn)) + " evaluated outside its domain (argument " +
                      std::to_string(x) + ")",
                  {}, {});
}

}  // namespace

std::string_view name_of(Elementary fn) { return kNames[static_cast<std::size_t>(fn)]; }

bool lookup_elementary(std::string_view name, Elementary& out) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) {
      out = static_cast<Elementary>(i);
      return true;
    }
  }
  return false;
}

std::array<double, 4> elementary_derivatives(Elementary fn, double x, int order) {
  std::array<double, 4> d{};
  switch (fn) {
    case Elementary::sin: {
      const double s = std::sin(x), c = std::cos(x);
      d = {s, c, -s, -c};
      break;
    }
    case Elementary::cos: {
      const double s = std::sin(x), c = std::cos(x);
      d = {c, -s, -c, s};
      break;
    }
    case Elementary::tan: {
      if (std::cos(x) == 0.0) domain_error(fn, x);
      const double t = std::tan(x), sec2 = 1.0 + t * t;
      d = {t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t)};
      break;
    }
    case Elementary::asin: {
      if (std::abs(x) > 1.0 || (order > 0 && std::abs(x) == 1.0)) domain_error(fn, x);
      const double r = 1.0 - x * x;
      d[0] = std::asin(x);
      if (order > 0) {
        const double s = std::sqrt(r);
        d[1] = 1.0 / s;
        d[2] = x / (r * s);
        d[3] = (1.0 + 2.0 * x * x) / (r * r * s);
      }
      break;
    }
    case Elementary::atan: {
      const double r = 1.0 + x * x;
      d = {std::atan(x), 1.0 / r, -2.0 * x / (r * r), (6.0 * x * x - 2.0) / (r * r * r)};
      break;
    }
    case Elementary::exp: {
      const double e = std::exp(x);
      d = {e, e, e, e};
      break;
    }
    case Elementary::log: {
      if (x <= 0.0) domain_error(fn, x);
      d = {std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)};
      break;
    }
    case Elementary::sqrt: {
      if (x < 0.0 || (order > 0 && x == 0.0)) domain_error(fn, x);
      const double s = std::sqrt(x);
      d[0] = s;
      if (order > 0) {
        d[1] = 0.5 / s;
        d[2] = -0.25 / (x * s);
        d[3] = 0.375 / (x * x * s);
      }
      break;
    }
    case Elementary::sinh: {
      const double s = std::sinh(x), c = std::cosh(x);
      d = {s, c, s, c};
      break;
    }
    case Elementary::cosh: {
      const double s = std::sinh(x), c = std::cosh(x);
      d = {c, s, c, s};
      break;
    }
  }
  for (int k = order + 1; k < 4; ++k) d[static_cast<std::size_t>(k)] = 0.0;
  return d;
}

std::array<double, 4> power_derivatives(double x, double p, int order) {
  if (!(x > 0.0)) {
    throw EvalError("non-integer power of a non-positive base (" + std::to_string(x) + ")", {}, {});
  }
  std::array<double, 4> d{};
  d[0] = std::pow(x, p);
  if (order > 0) d[1] = p * std::pow(x, p - 1.0);
  if (order > 1) d[2] = p * (p - 1.0) * std::pow(x, p - 2.0);
  if (order > 2) d[3] = p * (p - 1.0) * (p - 2.0) * std::pow(x, p - 3.0);
  return d;
}

Jet1 chain(const std::array<double, 4>& d, const Jet1& g) {
  return {d[0],
          d[1] * g.c1,
          d[2] * g.c1 * g.c1 + d[1] * g.c2,
          d[3] * g.c1 * g.c1 * g.c1 + 3.0 * d[2] * g.c1 * g.c2 + d[1] * g.c3};
}

Jet2 chain(const std::array<double, 4>& d, const Jet2& g) {
  return {d[0],
          d[1] * g.c10,
          d[1] * g.c01,
          d[2] * g.c10 * g.c10 + d[1] * g.c20,
          d[2] * g.c10 * g.c01 + d[1] * g.c11,
          d[2] * g.c01 * g.c01 + d[1] * g.c02};
}

Jet1 compose(Elementary fn, const Jet1& inner) {
  return chain(elementary_derivatives(fn, inner.c0, 3), inner);
}

Jet2 compose(Elementary fn, const Jet2& inner) {
  return chain(elementary_derivatives(fn, inner.c00, 2), inner);
}

// Quotient coefficients from q*b = a, solved order by order.
Jet1 operator/(const Jet1& a, const Jet1& b) {
  if (b.c0 == 0.0) throw EvalError("division by zero", {}, {});
  Jet1 q;
  q.c0 = a.c0 / b.c0;
  q.c1 = (a.c1 - q.c0 * b.c1) / b.c0;
  q.c2 = (a.c2 - 2.0 * q.c1 * b.c1 - q.c0 * b.c2) / b.c0;
  q.c3 = (a.c3 - 3.0 * q.c2 * b.c1 - 3.0 * q.c1 * b.c2 - q.c0 * b.c3) / b.c0;
  return q;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.c00 == 0.0) throw EvalError("division by zero", {}, {});
  Jet2 q;
  q.c00 = a.c00 / b.c00;
  q.c10 = (a.c10 - q.c00 * b.c10) / b.c00;
  q.c01 = (a.c01 - q.c00 * b.c01) / b.c00;
  q.c20 = (a.c20 - 2.0 * q.c10 * b.c10 - q.c00 * b.c20) / b.c00;
  q.c11 = (a.c11 - q.c10 * b.c01 - q.c01 * b.c10 - q.c00 * b.c11) / b.c00;
  q.c02 = (a.c02 - 2.0 * q.c01 * b.c01 - q.c00 * b.c02) / b.c00;
  return q;
}

namespace {

template <class J>
J pow_int_impl(const J& a, long n) {
  if (n < 0) return J::constant(1.0) / pow_int_impl(a, -n);
  J result = J::constant(1.0);
  J base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace

Jet1 pow_int(const Jet1& a, long n) { return pow_int_impl(a, n); }
Jet2 pow_int(const Jet2& a, long n) { return pow_int_impl(a, n); }

}  // namespace galileo
