#include <cmath>
#include <cstdio>
#include <utility>

#include "expr_node.hpp"
#include "galileo/error.hpp"

namespace galileo {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  for (char c : s) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

const VarList& require_same_vars(const Expr& a, const Expr& b) {
  const auto& va = ExprAccess::vars(a);
  const auto& vb = ExprAccess::vars(b);
  if (va != vb && *va != *vb) {
    throw PreconditionError("expressions are defined over different variable lists");
  }
  return va;
}

Expr combine(BinaryOp op, const Expr& a, const Expr& b) {
  const auto& vars = require_same_vars(a, b);
  return ExprAccess::make(make_binary_node(op, ExprAccess::root(a), ExprAccess::root(b)), vars);
}

NodePtr signed_constant_node(double value) {
  if (!std::isfinite(value)) throw PreconditionError("non-finite constant");
  if (value < 0.0) return make_negate_node(make_constant_node(-value));
  return make_constant_node(value == 0.0 ? 0.0 : value);
}

Expr lift(double x, const Expr& like) {
  return ExprAccess::make(signed_constant_node(x), ExprAccess::vars(like));
}

char op_char(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::sub: return '-';
    case BinaryOp::mul: return '*';
    case BinaryOp::div: return '/';
    case BinaryOp::pow: return '^';
  }
  return '?';
}

bool nodes_equal(const Expr::Node& a, const Expr::Node& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::constant:
      return a.value == b.value;
    case Expr::Kind::variable:
      return a.var == b.var;
    case Expr::Kind::negate:
      return nodes_equal(*a.lhs, *b.lhs);
    case Expr::Kind::binary:
      return a.op == b.op && nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    case Expr::Kind::call:
      return a.fn == b.fn && nodes_equal(*a.lhs, *b.lhs);
    case Expr::Kind::external:
      return a.external == b.external && nodes_equal(*a.lhs, *b.lhs);
  }
  return false;
}

NodePtr substitute_node(const NodePtr& n, std::span<const NodePtr> repl) {
  if (!n->has_vars) return n;
  switch (n->kind) {
    case Expr::Kind::constant:
      return n;
    case Expr::Kind::variable:
      return repl[n->var];
    case Expr::Kind::negate:
      return make_negate_node(substitute_node(n->lhs, repl));
    case Expr::Kind::binary:
      return make_binary_node(n->op, substitute_node(n->lhs, repl), substitute_node(n->rhs, repl));
    case Expr::Kind::call:
      return make_call_node(n->fn, substitute_node(n->lhs, repl));
    case Expr::Kind::external:
      return make_external_node(n->external, substitute_node(n->lhs, repl));
  }
  return n;
}

}  // namespace

void check_variable_list(const std::vector<std::string>& vars) {
  if (vars.size() != 1 && vars.size() != 2) {
    throw PreconditionError("an expression must declare one or two variables");
  }
  for (const auto& v : vars) {
    Elementary fn;
    if (!is_identifier(v)) throw PreconditionError("invalid variable name '" + v + "'");
    if (lookup_elementary(v, fn) || v == "pi" || v == "e") {
      throw PreconditionError("variable name '" + v + "' shadows a built-in name");
    }
  }
  if (vars.size() == 2 && vars[0] == vars[1]) {
    throw PreconditionError("variable names must be distinct");
  }
}

NodePtr make_constant_node(double value) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::constant;
  n->value = value;
  return n;
}

NodePtr make_variable_node(std::size_t index) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::variable;
  n->var = index;
  n->has_vars = true;
  return n;
}

NodePtr make_negate_node(NodePtr child) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::negate;
  n->has_vars = child->has_vars;
  n->lhs = std::move(child);
  return n;
}

NodePtr make_binary_node(BinaryOp op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::binary;
  n->op = op;
  n->has_vars = lhs->has_vars || rhs->has_vars;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_call_node(Elementary fn, NodePtr arg) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::call;
  n->fn = fn;
  n->has_vars = arg->has_vars;
  n->lhs = std::move(arg);
  return n;
}

NodePtr make_external_node(std::shared_ptr<const UnivariateFunction> fn, NodePtr arg) {
  if (!fn) throw PreconditionError("null external function");
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::external;
  n->external = std::move(fn);
  n->has_vars = arg->has_vars;
  n->lhs = std::move(arg);
  return n;
}

std::string node_to_string(const Expr::Node& n, const std::vector<std::string>& vars) {
  switch (n.kind) {
    case Expr::Kind::constant: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      return buf;
    }
    case Expr::Kind::variable:
      return n.var < vars.size() ? vars[n.var] : "?";
    case Expr::Kind::negate:
      return "(-" + node_to_string(*n.lhs, vars) + ")";
    case Expr::Kind::binary:
      return "(" + node_to_string(*n.lhs, vars) + " " + op_char(n.op) + " " +
             node_to_string(*n.rhs, vars) + ")";
    case Expr::Kind::call:
      return std::string(name_of(n.fn)) + "(" + node_to_string(*n.lhs, vars) + ")";
    case Expr::Kind::external:
      return n.external->name() + "(" + node_to_string(*n.lhs, vars) + ")";
  }
  return {};
}

Expr Expr::constant(double value, std::vector<std::string> variables) {
  NodePtr node = signed_constant_node(value);
  check_variable_list(variables);
  return Expr(std::move(node), std::make_shared<const std::vector<std::string>>(std::move(variables)));
}

Expr Expr::variable(std::string_view name, std::vector<std::string> variables) {
  check_variable_list(variables);
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) {
      return Expr(make_variable_node(i),
                  std::make_shared<const std::vector<std::string>>(std::move(variables)));
    }
  }
  throw PreconditionError("variable '" + std::string(name) + "' is not declared");
}

Expr::Kind Expr::kind() const { return root_->kind; }

bool Expr::depends_on_variables() const { return root_->has_vars; }

bool Expr::is_constant() const {
  return root_->kind == Kind::constant ||
         (root_->kind == Kind::negate && root_->lhs->kind == Kind::constant);
}

std::string Expr::to_string() const { return node_to_string(*root_, *vars_); }

bool Expr::structurally_equal(const Expr& other) const {
  return *vars_ == *other.vars_ && nodes_equal(*root_, *other.root_);
}

Expr Expr::substitute(std::span<const Expr> replacements) const {
  if (replacements.size() != arity()) {
    throw PreconditionError("substitute needs one replacement per variable");
  }
  for (std::size_t i = 1; i < replacements.size(); ++i) {
    require_same_vars(replacements[0], replacements[i]);
  }
  std::vector<NodePtr> roots;
  for (const auto& r : replacements) roots.push_back(r.root_);
  return Expr(substitute_node(root_, roots), replacements[0].vars_);
}

Expr Expr::operator-() const { return Expr(make_negate_node(root_), vars_); }

Expr operator+(const Expr& a, const Expr& b) { return combine(BinaryOp::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return combine(BinaryOp::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return combine(BinaryOp::mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return combine(BinaryOp::div, a, b); }
Expr operator+(const Expr& a, double b) { return a + lift(b, a); }
Expr operator+(double a, const Expr& b) { return lift(a, b) + b; }
Expr operator-(const Expr& a, double b) { return a - lift(b, a); }
Expr operator-(double a, const Expr& b) { return lift(a, b) - b; }
Expr operator*(double a, const Expr& b) { return lift(a, b) * b; }
Expr operator*(const Expr& a, double b) { return a * lift(b, a); }
Expr operator/(const Expr& a, double b) { return a / lift(b, a); }
Expr pow(const Expr& base, const Expr& exponent) { return combine(BinaryOp::pow, base, exponent); }
Expr pow(const Expr& base, double exponent) { return pow(base, lift(exponent, base)); }

Expr call(Elementary fn, const Expr& arg) {
  return ExprAccess::make(make_call_node(fn, ExprAccess::root(arg)), ExprAccess::vars(arg));
}

Expr apply(std::shared_ptr<const UnivariateFunction> fn, const Expr& arg) {
  return ExprAccess::make(make_external_node(std::move(fn), ExprAccess::root(arg)),
                          ExprAccess::vars(arg));
}

}  // namespace galileo
