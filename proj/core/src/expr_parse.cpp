#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "expr_node.hpp"
#include "galileo/error.hpp"

namespace galileo {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::end) return "end of input";
  return "'" + std::string(t.lexeme) + "'";
}

class Parser {
 public:
  Parser(std::string_view source, const std::vector<std::string>& vars)
      : tokens_(tokenize(source)), vars_(vars) {}

  NodePtr parse() {
    NodePtr root = expr();
    if (peek().kind != Token::Kind::end) {
      throw ParseError("unexpected " + describe(peek()), peek().position);
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_op(char c) const {
    return peek().kind == Token::Kind::op && peek().lexeme.front() == c;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) throw ParseError("expression nested too deeply", p.peek().position);
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  NodePtr expr() {
    DepthGuard guard(*this);
    NodePtr lhs = term();
    while (at_op('+') || at_op('-')) {
      const BinaryOp op = next().lexeme.front() == '+' ? BinaryOp::add : BinaryOp::sub;
      lhs = make_binary_node(op, lhs, term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (at_op('*') || at_op('/')) {
      const BinaryOp op = next().lexeme.front() == '*' ? BinaryOp::mul : BinaryOp::div;
      lhs = make_binary_node(op, lhs, factor());
    }
    return lhs;
  }

  NodePtr factor() {
    DepthGuard guard(*this);
    if (at_op('-')) {
      next();
      return make_negate_node(factor());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (at_op('^')) {
      next();
      return make_binary_node(BinaryOp::pow, base, factor());
    }
    return base;
  }

  NodePtr atom() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::number: {
        double value = 0.0;
        std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), value);
        return make_constant_node(value);
      }
      case Token::Kind::lparen: {
        NodePtr inner = expr();
        expect_rparen();
        return inner;
      }
      case Token::Kind::identifier:
        return name(t);
      default:
        throw ParseError("unexpected " + describe(t), t.position);
    }
  }

  NodePtr name(const Token& t) {
    const bool called = peek().kind == Token::Kind::lparen;
    Elementary fn;
    if (lookup_elementary(t.lexeme, fn)) {
      if (!called) {
        throw ParseError("function '" + std::string(t.lexeme) + "' requires a parenthesized argument",
                         t.position);
      }
      next();
      if (peek().kind == Token::Kind::rparen) {
        throw ParseError("function '" + std::string(t.lexeme) + "' takes exactly one argument",
                         peek().position);
      }
      NodePtr arg = expr();
      if (peek().kind == Token::Kind::comma) {
        throw ParseError("function '" + std::string(t.lexeme) + "' takes exactly one argument",
                         peek().position);
      }
      expect_rparen();
      return make_call_node(fn, arg);
    }

    NodePtr leaf;
    for (std::size_t i = 0; i < vars_.size() && !leaf; ++i) {
      if (vars_[i] == t.lexeme) leaf = make_variable_node(i);
    }
    if (!leaf && t.lexeme == "pi") leaf = make_constant_node(std::numbers::pi);
    if (!leaf && t.lexeme == "e") leaf = make_constant_node(std::numbers::e);
    if (!leaf) throw ParseError("unknown identifier '" + std::string(t.lexeme) + "'", t.position);
    if (called) {
      throw ParseError("'" + std::string(t.lexeme) + "' is not a function", peek().position);
    }
    return leaf;
  }

  void expect_rparen() {
    if (peek().kind != Token::Kind::rparen) {
      throw ParseError("expected ')' but found " + describe(peek()), peek().position);
    }
    next();
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  static constexpr int kMaxDepth = 256;
};

}  // namespace

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || c == '.') {
      bool digits = false;
      while (i < s.size() && is_digit(s[i])) ++i, digits = true;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i, digits = true;
      }
      if (!digits) throw ParseError("malformed number", start);
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && is_digit(s[j])) {
          while (j < s.size() && is_digit(s[j])) ++j;
          i = j;
        } else {
          throw ParseError("malformed exponent in number", i);
        }
      }
      const std::string_view lexeme = s.substr(start, i - start);
      double value = 0.0;
      const auto res = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
      if (res.ec != std::errc() || res.ptr != lexeme.data() + lexeme.size() || !std::isfinite(value)) {
        throw ParseError("number literal is not a finite double", start);
      }
      out.push_back({Token::Kind::number, lexeme, start});
    } else if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      out.push_back({Token::Kind::identifier, s.substr(start, i - start), start});
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Token::Kind::op, s.substr(i++, 1), start});
    } else if (c == '(') {
      out.push_back({Token::Kind::lparen, s.substr(i++, 1), start});
    } else if (c == ')') {
      out.push_back({Token::Kind::rparen, s.substr(i++, 1), start});
    } else if (c == ',') {
      out.push_back({Token::Kind::comma, s.substr(i++, 1), start});
    } else {
      throw ParseError("unexpected character", start);
    }
  }
  out.push_back({Token::Kind::end, {}, s.size()});
  return out;
}

Expr Expr::parse(std::string_view source, std::vector<std::string> variables) {
  check_variable_list(variables);
  NodePtr root = Parser(source, variables).parse();
  return ExprAccess::make(std::move(root),
                          std::make_shared<const std::vector<std::string>>(std::move(variables)));
}

}  // namespace galileo
