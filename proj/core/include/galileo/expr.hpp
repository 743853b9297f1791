#pragma once

// A small scalar expression language in one or two named variables.
//
// Grammar (whitespace between tokens is ignored):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?
//   atom   := number | name | name '(' expr ')' | '(' expr ')'
//
// So '^' is right-associative and binds tighter than unary minus: -u^2 is
// -(u^2), 2^-1 is 2^(-1). There is no implicit multiplication. Names are the
// declared variables, the constants pi and e, and the functions sin, cos,
// tan, asin, atan, exp, log, sqrt, sinh, cosh (one argument each).

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galileo/jets.hpp"

namespace galileo {

struct Token {
  enum class Kind { number, identifier, op, lparen, rparen, comma, end };
  Kind kind;
  std::string_view lexeme;
  std::size_t position;  // byte offset into the source
};

/// Splits `source` into tokens, terminated by a Kind::end token. Throws
/// ParseError on a character outside the grammar or a malformed/non-finite
/// number literal.
std::vector<Token> tokenize(std::string_view source);

/// A univariate function supplied by code rather than text, e.g. a sampled
/// interpolant. Implementations must be immutable and thread-safe.
class UnivariateFunction {
 public:
  virtual ~UnivariateFunction() = default;
  virtual std::string name() const = 0;
  /// Value and the first `order` (<= 3) derivatives at x. Throws EvalError
  /// when x is outside the function's domain.
  virtual std::array<double, 4> derivatives(double x, int order) const = 0;
};

enum class BinaryOp { add, sub, mul, div, pow };

/// Immutable expression tree plus the ordered list of variables it is
/// defined over. Copies share structure; safe to use from several threads.
class Expr {
 public:
  enum class Kind { constant, variable, negate, binary, call, external };

  /// Throws ParseError (syntax, unknown identifier, function arity misuse)
  /// or PreconditionError (bad variable list: size must be 1 or 2, names
  /// distinct identifiers that do not shadow a function or constant).
  static Expr parse(std::string_view source, std::vector<std::string> variables);

  /// Negative values are stored as negate(constant(|value|)) so built trees
  /// print and re-parse to the same structure. Non-finite values throw.
  static Expr constant(double value, std::vector<std::string> variables);
  static Expr variable(std::string_view name, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return *vars_; }
  std::size_t arity() const { return vars_->size(); }
  Kind kind() const;
  /// True if any variable occurs in the tree.
  bool depends_on_variables() const;
  /// True if the tree is a constant or the negation of one (parsed or built).
  bool is_constant() const;

  /// Fully parenthesized form that re-parses to a structurally equal tree
  /// (except for external nodes, which print as name(arg) and do not parse).
  std::string to_string() const;

  bool structurally_equal(const Expr& other) const;
  friend bool operator==(const Expr& a, const Expr& b) { return a.structurally_equal(b); }

  /// Replaces variable i by replacements[i]. All replacements must share one
  /// variable list, which becomes the result's.
  Expr substitute(std::span<const Expr> replacements) const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator+(const Expr& a, double b);
  friend Expr operator+(double a, const Expr& b);
  friend Expr operator-(const Expr& a, double b);
  friend Expr operator-(double a, const Expr& b);
  friend Expr operator*(double a, const Expr& b);
  friend Expr operator*(const Expr& a, double b);
  friend Expr operator/(const Expr& a, double b);
  friend Expr pow(const Expr& base, const Expr& exponent);
  friend Expr pow(const Expr& base, double exponent);
  friend Expr call(Elementary fn, const Expr& arg);
  friend Expr apply(std::shared_ptr<const UnivariateFunction> fn, const Expr& arg);

  struct Node;

 private:
  Expr(std::shared_ptr<const Node> root, std::shared_ptr<const std::vector<std::string>> vars)
      : root_(std::move(root)), vars_(std::move(vars)) {}

  std::shared_ptr<const Node> root_;
  std::shared_ptr<const std::vector<std::string>> vars_;

  friend class ExprAccess;
};

Expr pow(const Expr& base, const Expr& exponent);
Expr pow(const Expr& base, double exponent);
Expr call(Elementary fn, const Expr& arg);
/// Wraps an externally supplied univariate function as a node, `fn(arg)`.
Expr apply(std::shared_ptr<const UnivariateFunction> fn, const Expr& arg);

/// Plain value at the point; `at.size()` must equal the arity.
double evaluate(const Expr& e, std::span<const double> at);

/// Value and three derivatives; `e` must have arity 1.
Jet1 eval_jet1(const Expr& e, const Jet1& at);

/// Value, gradient and Hessian; `at.size()` must equal the arity (1 or 2).
Jet2 eval_jet2(const Expr& e, std::span<const Jet2> at);
inline Jet2 eval_jet2(const Expr& e, const Jet2& u, const Jet2& v) {
  const std::array<Jet2, 2> at{u, v};
  return eval_jet2(e, at);
}

}  // namespace galileo
