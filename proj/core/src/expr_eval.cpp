#include <cmath>
#include <string>
#include <vector>

#include "expr_node.hpp"
#include "galileo/error.hpp"

namespace galileo {

namespace {

// Scalar adaptors: double (order 0), Jet1 (order 3), Jet2 (order 2).
template <class S>
struct Scalar;

template <>
struct Scalar<double> {
  static constexpr int order = 0;
  static double lift(double x) { return x; }
  static double value(double x) { return x; }
  static bool finite(double x) { return std::isfinite(x); }
  static double chain(const std::array<double, 4>& d, double) { return d[0]; }
  static double div(double a, double b) {
    if (b == 0.0) throw EvalError("division by zero", {}, {});
    return a / b;
  }
};

template <>
struct Scalar<Jet1> {
  static constexpr int order = 3;
  static Jet1 lift(double x) { return Jet1::constant(x); }
  static double value(const Jet1& x) { return x.c0; }
  static bool finite(const Jet1& x) { return x.is_finite(); }
  static Jet1 chain(const std::array<double, 4>& d, const Jet1& g) { return galileo::chain(d, g); }
  static Jet1 div(const Jet1& a, const Jet1& b) { return a / b; }
};

template <>
struct Scalar<Jet2> {
  static constexpr int order = 2;
  static Jet2 lift(double x) { return Jet2::constant(x); }
  static double value(const Jet2& x) { return x.c00; }
  static bool finite(const Jet2& x) { return x.is_finite(); }
  static Jet2 chain(const std::array<double, 4>& d, const Jet2& g) { return galileo::chain(d, g); }
  static Jet2 div(const Jet2& a, const Jet2& b) { return a / b; }
};

constexpr long kMaxIntegerExponent = 1L << 20;

template <class S>
S pow_integer(const S& base, long n) {
  using T = Scalar<S>;
  if (n < 0) return T::div(T::lift(1.0), pow_integer(base, -n));
  S result = T::lift(1.0);
  S b = base;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? b : result * b;
      first = false;
    }
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

template <class S>
class Evaluator {
 public:
  Evaluator(std::span<const S> at, const std::vector<std::string>& vars) : at_(at), vars_(vars) {}

  S eval(const Expr::Node& n) const {
    S out;
    try {
      out = eval_node(n);
    } catch (const EvalError& e) {
      if (!e.subexpression().empty()) throw;
      throw EvalError(std::string(e.what()) + " in " + node_to_string(n, vars_) + where(),
                      node_to_string(n, vars_), point());
    }
    if (!Scalar<S>::finite(out)) {
      throw EvalError("non-finite value or derivative in " + node_to_string(n, vars_) + where(),
                      node_to_string(n, vars_), point());
    }
    return out;
  }

 private:
  using T = Scalar<S>;

  S eval_node(const Expr::Node& n) const {
    switch (n.kind) {
      case Expr::Kind::constant:
        return T::lift(n.value);
      case Expr::Kind::variable:
        return at_[n.var];
      case Expr::Kind::negate:
        return -eval(*n.lhs);
      case Expr::Kind::call: {
        const S arg = eval(*n.lhs);
        return T::chain(elementary_derivatives(n.fn, T::value(arg), T::order), arg);
      }
      case Expr::Kind::external: {
        const S arg = eval(*n.lhs);
        return T::chain(n.external->derivatives(T::value(arg), T::order), arg);
      }
      case Expr::Kind::binary:
        break;
    }
    const S a = eval(*n.lhs);
    switch (n.op) {
      case BinaryOp::add: return a + eval(*n.rhs);
      case BinaryOp::sub: return a - eval(*n.rhs);
      case BinaryOp::mul: return a * eval(*n.rhs);
      case BinaryOp::div: return T::div(a, eval(*n.rhs));
      case BinaryOp::pow: return power(a, *n.rhs);
    }
    return a;
  }

  S power(const S& base, const Expr::Node& exponent) const {
    if (!exponent.has_vars) {
      const double p = Evaluator<double>({}, vars_).eval(exponent);
      if (p == std::trunc(p) && std::abs(p) <= static_cast<double>(kMaxIntegerExponent)) {
        return pow_integer(base, static_cast<long>(p));
      }
      return T::chain(power_derivatives(T::value(base), p, T::order), base);
    }
    // base^g = exp(g log base), defined for positive bases only
    if (!(T::value(base) > 0.0)) {
      throw EvalError("variable exponent requires a positive base", {}, {});
    }
    const S log_base = T::chain(elementary_derivatives(Elementary::log, T::value(base), T::order), base);
    const S arg = eval(exponent) * log_base;
    return T::chain(elementary_derivatives(Elementary::exp, T::value(arg), T::order), arg);
  }

  std::vector<double> point() const {
    std::vector<double> p;
    for (const auto& x : at_) p.push_back(T::value(x));
    return p;
  }

  std::string where() const {
    if (at_.empty()) return {};
    std::string s = " at (";
    for (std::size_t i = 0; i < at_.size(); ++i) {
      if (i) s += ", ";
      s += (i < vars_.size() ? vars_[i] + "=" : std::string()) + std::to_string(T::value(at_[i]));
    }
    return s + ")";
  }

  std::span<const S> at_;
  const std::vector<std::string>& vars_;
};

void check_arity(const Expr& e, std::size_t given) {
  if (given != e.arity()) {
    throw PreconditionError("expression declares " + std::to_string(e.arity()) +
                            " variable(s) but " + std::to_string(given) + " value(s) were given");
  }
}

}  // namespace

double evaluate(const Expr& e, std::span<const double> at) {
  check_arity(e, at.size());
  return Evaluator<double>(at, e.variables()).eval(*ExprAccess::root(e));
}

Jet1 eval_jet1(const Expr& e, const Jet1& at) {
  check_arity(e, 1);
  const std::span<const Jet1> span(&at, 1);
  return Evaluator<Jet1>(span, e.variables()).eval(*ExprAccess::root(e));
}

Jet2 eval_jet2(const Expr& e, std::span<const Jet2> at) {
  check_arity(e, at.size());
  return Evaluator<Jet2>(at, e.variables()).eval(*ExprAccess::root(e));
}

}  // namespace galileo
