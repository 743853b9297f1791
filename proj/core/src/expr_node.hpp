#pragma once

#include <memory>
#include <string>
#include <vector>

#include "galileo/expr.hpp"

namespace galileo {

struct Expr::Node {
  Expr::Kind kind = Expr::Kind::constant;
  double value = 0.0;    // constant
  std::size_t var = 0;   // variable index
  BinaryOp op = BinaryOp::add;
  Elementary fn = Elementary::sin;
  std::shared_ptr<const UnivariateFunction> external;
  std::shared_ptr<const Node> lhs;  // negate / call / external argument, binary left
  std::shared_ptr<const Node> rhs;  // binary right
  bool has_vars = false;
};

using NodePtr = std::shared_ptr<const Expr::Node>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

class ExprAccess {
 public:
  static const NodePtr& root(const Expr& e) { return e.root_; }
  static const VarList& vars(const Expr& e) { return e.vars_; }
  static Expr make(NodePtr root, VarList vars) { return Expr(std::move(root), std::move(vars)); }
};

NodePtr make_constant_node(double value);
NodePtr make_variable_node(std::size_t index);
NodePtr make_negate_node(NodePtr child);
NodePtr make_binary_node(BinaryOp op, NodePtr lhs, NodePtr rhs);
NodePtr make_call_node(Elementary fn, NodePtr arg);
NodePtr make_external_node(std::shared_ptr<const UnivariateFunction> fn, NodePtr arg);

std::string node_to_string(const Expr::Node& n, const std::vector<std::string>& vars);

/// Validates a declared variable list; throws PreconditionError.
void check_variable_list(const std::vector<std::string>& vars);

}  // namespace galileo
