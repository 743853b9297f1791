#pragma once

// Deterministic random expressions, surfaces and motions shared by the unit
// tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "galileo/error.hpp"
#include "galileo/expr.hpp"
#include "galileo/galilean.hpp"
#include "galileo/surface.hpp"

namespace galileo::corpus {

/// mt19937_64 bits mapped to doubles by hand so the stream is the same on
/// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int pick(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

// Derivative oracle: Richardson-extrapolated central differences with steps
// large enough to stay clear of the rounding floor.
inline FdSteps oracle_steps() {
  FdSteps s;
  s.first = 1e-3;
  s.second = 1e-3;
  s.third = 2.5e-3;
  s.richardson = true;
  return s;
}

/// 1e-5 relative or 1e-7 absolute, whichever is looser.
inline bool oracle_close(double exact, double estimate) {
  return std::abs(exact - estimate) <= std::max(1e-5 * std::abs(exact), 1e-7);
}

namespace detail {

inline Expr leaf(Rng& r, const std::vector<std::string>& vars) {
  if (r.uniform() < 0.65) return Expr::variable(vars[static_cast<std::size_t>(r.pick(static_cast<int>(vars.size())))], vars);
  return Expr::constant(std::round(r.uniform(-2.0, 2.0) * 4.0) / 4.0, vars);
}

// `budget` is the depth the subtree may occupy; each shape spends as many
// levels above its random children as it adds nodes.
inline Expr grow(Rng& r, const std::vector<std::string>& vars, int budget) {
  if (budget <= 1 || r.uniform() < 0.15) return leaf(r, vars);
  for (;;) {
    const int shape = r.pick(18);
    constexpr int cost[18] = {1, 1, 1, 3, 1, 1, 1, 1, 2, 3, 3, 3, 3, 2, 2, 1, 3, 3};
    if (budget - cost[shape] < 1) continue;
    const int sub = budget - cost[shape];
    const auto one = Expr::constant(1.0, vars);
    switch (shape) {
      case 0: return grow(r, vars, sub) + grow(r, vars, sub);
      case 1: return grow(r, vars, sub) - grow(r, vars, sub);
      case 2: return grow(r, vars, sub) * grow(r, vars, sub);
      case 3: return grow(r, vars, budget - 1) / (1.0 + 0.5 * r.pick(3) + pow(grow(r, vars, sub), 2.0));
      case 4: return -grow(r, vars, sub);
      case 5: return call(Elementary::sin, grow(r, vars, sub));
      case 6: return call(Elementary::cos, grow(r, vars, sub));
      case 7: return call(Elementary::atan, grow(r, vars, sub));
      case 8: return call(Elementary::exp, call(Elementary::sin, grow(r, vars, sub)));
      case 9: return call(Elementary::log, one + pow(grow(r, vars, sub), 2.0));
      case 10: return call(Elementary::sqrt, one + pow(grow(r, vars, sub), 2.0));
      case 11: return call(Elementary::asin, 0.5 * call(Elementary::sin, grow(r, vars, sub)));
      case 12: return call(Elementary::tan, 0.5 * call(Elementary::atan, grow(r, vars, sub)));
      case 13: return call(Elementary::sinh, call(Elementary::atan, grow(r, vars, sub)));
      case 14: return call(Elementary::cosh, call(Elementary::atan, grow(r, vars, sub)));
      case 15: return pow(grow(r, vars, sub), static_cast<double>(2 + r.pick(2)));
      case 16: return pow(1.5 + call(Elementary::sin, grow(r, vars, sub)), grow(r, vars, budget - 1));
      default: return pow(one + pow(grow(r, vars, sub), 2.0), 0.75);
    }
  }
}

inline bool tame(std::initializer_list<double> xs, double bound) {
  return std::all_of(xs.begin(), xs.end(), [&](double x) { return std::isfinite(x) && std::abs(x) <= bound; });
}

}  // namespace detail

/// Random expression of tree depth at most `depth`.
inline Expr random_expr(Rng& r, const std::vector<std::string>& vars, int depth) {
  return detail::grow(r, vars, depth);
}

/// A univariate expression and a point where all its jets are moderate.
struct UnivariateCase {
  Expr e;
  double at;
};

inline std::vector<UnivariateCase> univariate_corpus(std::size_t n, std::uint64_t seed, int depth = 6) {
  Rng r(seed);
  const std::vector<std::string> vars = {"u"};
  std::vector<UnivariateCase> out;
  while (out.size() < n) {
    Expr e = random_expr(r, vars, depth);
    const double at = r.uniform(-1.0, 1.0);
    try {
      const Jet1 j = eval_jet1(e, Jet1::seed(at));
      if (!detail::tame({j.c0, j.c1, j.c2, j.c3}, 1e3)) continue;
    } catch (const EvalError&) {
      continue;
    }
    out.push_back({std::move(e), at});
  }
  return out;
}

struct BivariateCase {
  Expr e;
  double u, v;
};

inline std::vector<BivariateCase> bivariate_corpus(std::size_t n, std::uint64_t seed, int depth = 6) {
  Rng r(seed);
  const std::vector<std::string> vars = {"u", "v"};
  std::vector<BivariateCase> out;
  while (out.size() < n) {
    Expr e = random_expr(r, vars, depth);
    const double u = r.uniform(-1.0, 1.0), v = r.uniform(-1.0, 1.0);
    try {
      const Jet2 j = eval_jet2(e, Jet2::seed_u(u), Jet2::seed_v(v));
      if (!detail::tame({j.c00, j.c10, j.c01, j.c20, j.c11, j.c02}, 1e3)) continue;
    } catch (const EvalError&) {
      continue;
    }
    out.push_back({std::move(e), u, v});
  }
  return out;
}

/// Admissible surfaces on [-1, 1]^2 with W bounded away from zero and
/// moderate curvatures at the 5x5 check nodes.
inline std::vector<Surface> random_surfaces(std::size_t n, std::uint64_t seed) {
  Rng r(seed);
  const std::vector<std::string> vars = {"u", "v"};
  std::vector<Surface> out;
  while (out.size() < n) {
    const Expr u = Expr::variable("u", vars), v = Expr::variable("v", vars);
    const Expr x = r.uniform(0.5, 1.5) * u + r.uniform(-0.5, 0.5) * v +
                   0.1 * call(Elementary::sin, random_expr(r, vars, 3));
    Surface s(x, random_expr(r, vars, 4), random_expr(r, vars, 4));
    bool ok = is_admissible_surface(s, 11, 11).admissible;
    for (int i = 0; ok && i < 5; ++i) {
      for (int j = 0; ok && j < 5; ++j) {
        try {
          const FundamentalData fd = fundamental(s, -1.0 + 0.5 * i, -1.0 + 0.5 * j);
          const Curvatures c = curvatures_from(fd);
          ok = fd.W > 1e-2 && detail::tame({c.K, c.H_paper}, 1e3);
        } catch (const Error&) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

inline GalileanMotion random_motion(Rng& r) {
  return {r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3),
          r.uniform(-std::numbers::pi, std::numbers::pi)};
}

inline Point3 random_point(Rng& r) { return {r.uniform(-5, 5), r.uniform(-5, 5), r.uniform(-5, 5)}; }

}  // namespace galileo::corpus
