#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "galileo/error.hpp"
#include "galileo/expr.hpp"
#include "galileo/ode.hpp"
#include "support/corpus.hpp"

using namespace galileo;

namespace {

const std::vector<std::string> kU = {"u"};
const std::vector<std::string> kUV = {"u", "v"};

double at(const Expr& e, double u) { return evaluate(e, std::array{u}); }

std::size_t parse_error_position(std::string_view src, const std::vector<std::string>& vars) {
  try {
    Expr::parse(src, vars);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for '" << src << "'";
  return 0;
}

}  // namespace

TEST(Tokenize, PositionsIncrease) {
  const auto toks = tokenize("sin(u) + 2.5e-1*v^2");
  ASSERT_GE(toks.size(), 10u);
  for (std::size_t i = 1; i < toks.size(); ++i) EXPECT_GT(toks[i].position, toks[i - 1].position);
  EXPECT_EQ(toks[0].kind, Token::Kind::identifier);
  EXPECT_EQ(toks[0].lexeme, "sin");
  EXPECT_EQ(toks[5].kind, Token::Kind::number);
  EXPECT_EQ(toks[5].lexeme, "2.5e-1");
  EXPECT_EQ(toks[5].position, 9u);
  EXPECT_EQ(toks.back().kind, Token::Kind::end);
}

TEST(Tokenize, RejectsStrayCharacterAndOverflow) {
  EXPECT_THROW(tokenize("u $ 2"), ParseError);
  EXPECT_THROW(tokenize("1e999"), ParseError);
}

TEST(Parse, PowerOfVariable) {
  const Expr e = Expr::parse("u^2", kU);
  EXPECT_EQ(e.kind(), Expr::Kind::binary);
  EXPECT_EQ(e.to_string(), "(u ^ 2)");
  EXPECT_TRUE(e.structurally_equal(pow(Expr::variable("u", kU), 2.0)));
}

TEST(Parse, UndeclaredIdentifier) {
  try {
    Expr::parse("sin(H*v)/H", {"v"});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown identifier 'H'"), std::string::npos);
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, ProductVanishesAtZero) {
  EXPECT_EQ(at(Expr::parse("1/2*s*sqrt(1-s^2)", {"s"}), 0.0), 0.0);
}

TEST(Parse, Precedence) {
  // '^' binds tighter than unary minus and is right associative
  EXPECT_EQ(at(Expr::parse("-u^2", kU), 3.0), -9.0);
  EXPECT_EQ(at(Expr::parse("2^3^2", kU), 0.0), 512.0);
  EXPECT_EQ(at(Expr::parse("1-2-3", kU), 0.0), -4.0);
  EXPECT_EQ(at(Expr::parse("8/4/2", kU), 0.0), 1.0);
  EXPECT_EQ(at(Expr::parse("2+3*4", kU), 0.0), 14.0);
  EXPECT_EQ(at(Expr::parse("u^-1", kU), 4.0), 0.25);
  EXPECT_DOUBLE_EQ(at(Expr::parse("pi + e", kU), 0.0), std::numbers::pi + std::numbers::e);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error_position("sin(", kU), 4u);
  EXPECT_EQ(parse_error_position("u +", kU), 3u);
  EXPECT_EQ(parse_error_position("(u", kU), 2u);
  EXPECT_EQ(parse_error_position("u)", kU), 1u);
  EXPECT_EQ(parse_error_position("sin u", kU), 0u);
  EXPECT_EQ(parse_error_position("u(2)", kU), 1u);
  EXPECT_EQ(parse_error_position("sin(u, u)", kU), 5u);
  EXPECT_EQ(parse_error_position("2u", kU), 1u);
  EXPECT_EQ(parse_error_position("", kU), 0u);
}

TEST(Parse, VariableListValidation) {
  EXPECT_THROW(Expr::parse("u", {}), PreconditionError);
  EXPECT_THROW(Expr::parse("u", {"u", "u"}), PreconditionError);
  EXPECT_THROW(Expr::parse("u", {"u", "v", "w"}), PreconditionError);
  EXPECT_THROW(Expr::parse("u", {"sin"}), PreconditionError);
  EXPECT_THROW(Expr::parse("u", {"pi"}), PreconditionError);
  EXPECT_THROW(Expr::parse("u", {"1x"}), PreconditionError);
}

TEST(Parse, DeepNestingIsAnErrorNotACrash) {
  const std::string deep = std::string(5000, '(') + "u" + std::string(5000, ')');
  EXPECT_THROW(Expr::parse(deep, kU), ParseError);
  const std::string fine = std::string(100, '(') + "u" + std::string(100, ')');
  EXPECT_EQ(at(Expr::parse(fine, kU), 2.0), 2.0);
}

TEST(Parse, PrinterRoundTrip) {
  corpus::Rng r(11);
  for (int k = 0; k < 300; ++k) {
    const Expr e = corpus::random_expr(r, kUV, 6);
    const Expr back = Expr::parse(e.to_string(), kUV);
    ASSERT_TRUE(back.structurally_equal(e)) << e.to_string();
  }
}

TEST(Parse, FuzzedTokenSequencesParseOrFailWithPosition) {
  const char* pieces[] = {"u", "v", "2", "0.5", "1e3", "+", "-", "*", "/", "^", "(", ")", ",",
                          "sin", "sqrt", "pi", "e", "H", " ", "."};
  corpus::Rng r(12);
  int parsed = 0, failed = 0;
  for (int k = 0; k < 5000; ++k) {
    std::string src;
    const int n = 1 + r.pick(12);
    for (int i = 0; i < n; ++i) src += pieces[r.pick(20)];
    try {
      Expr::parse(src, kUV);
      ++parsed;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), src.size()) << src;
      ++failed;
    }
  }
  EXPECT_GT(parsed, 0);
  EXPECT_GT(failed, 0);
}

TEST(Parse, FuzzedBytesNeverCrash) {
  corpus::Rng r(13);
  for (int k = 0; k < 5000; ++k) {
    std::string src;
    const int n = r.pick(20);
    for (int i = 0; i < n; ++i) src += static_cast<char>(r.pick(256));
    try {
      Expr::parse(src, kU);
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), src.size());
    }
  }
}

TEST(EvalJet1, Cube) {
  const Jet1 j = eval_jet1(Expr::parse("u^3", kU), Jet1::seed(2.0));
  EXPECT_EQ(j, (Jet1{8.0, 12.0, 12.0, 6.0}));
}

TEST(EvalJet1, Sine) {
  const Jet1 j = eval_jet1(Expr::parse("sin(u)", kU), Jet1::seed(0.0));
  EXPECT_EQ(j.c0, 0.0);
  EXPECT_EQ(j.c1, 1.0);
  EXPECT_EQ(j.c2, 0.0);
  EXPECT_EQ(j.c3, -1.0);
}

TEST(EvalJet1, ExpOfSquareAgainstPlainSteps) {
  const Expr e = Expr::parse("exp(u^2)", kU);
  const Jet1 j = eval_jet1(e, Jet1::seed(1.0));
  // library default steps (h = 1e-5) for the first two derivatives
  const auto fd = fd_oracle([&](double u) { return at(e, u); }, 1.0);
  EXPECT_NEAR(j.c1, fd.d1, 1e-5 * std::abs(j.c1));
  EXPECT_NEAR(j.c2, fd.d2, 1e-5 * std::abs(j.c2));
  const auto rich = fd_oracle([&](double u) { return at(e, u); }, 1.0, corpus::oracle_steps());
  EXPECT_NEAR(j.c3, rich.d3, 1e-5 * std::abs(j.c3));
  // hand derivatives: 2u e^{u^2}, (2 + 4u^2) e^{u^2}, (12u + 8u^3) e^{u^2}
  EXPECT_NEAR(j.c1, 2.0 * std::exp(1.0), 1e-14);
  EXPECT_NEAR(j.c2, 6.0 * std::exp(1.0), 1e-14);
  EXPECT_NEAR(j.c3, 20.0 * std::exp(1.0), 1e-13);
}

TEST(EvalJet1, DomainErrorNamesSubexpressionAndPoint) {
  const Expr e = Expr::parse("1 + sqrt(u - 2)", kU);
  try {
    eval_jet1(e, Jet1::seed(1.0));
    FAIL();
  } catch (const EvalError& err) {
    EXPECT_EQ(err.subexpression(), "sqrt((u - 2))");
    ASSERT_EQ(err.point().size(), 1u);
    EXPECT_EQ(err.point()[0], 1.0);
  }
  EXPECT_THROW(evaluate(Expr::parse("1/(u-1)", kU), std::array{1.0}), EvalError);
  EXPECT_THROW(evaluate(Expr::parse("log(u)", kU), std::array{-1.0}), EvalError);
  EXPECT_THROW(evaluate(Expr::parse("u^0.5", kU), std::array{-1.0}), EvalError);
  EXPECT_THROW(evaluate(Expr::parse("exp(u)", kU), std::array{1000.0}), EvalError);
}

TEST(EvalJet1, ArityMismatch) {
  EXPECT_THROW(eval_jet1(Expr::parse("u*v", kUV), Jet1::seed(1.0)), PreconditionError);
  EXPECT_THROW(evaluate(Expr::parse("u", kU), std::array{1.0, 2.0}), PreconditionError);
}

TEST(EvalJet2, Bilinear) {
  const Jet2 j = eval_jet2(Expr::parse("u*v", kUV), Jet2::seed_u(1.0), Jet2::seed_v(2.0));
  EXPECT_EQ(j, (Jet2{2.0, 2.0, 1.0, 0.0, 1.0, 0.0}));
}

TEST(EvalJet2, Paraboloid) {
  const Jet2 j = eval_jet2(Expr::parse("u^2+v^2", kUV), Jet2::seed_u(0.0), Jet2::seed_v(0.0));
  EXPECT_EQ(j, (Jet2{0.0, 0.0, 0.0, 2.0, 0.0, 2.0}));
}

TEST(EvalJet2, ShiftedSine) {
  const Expr e = Expr::parse("sin(u+2*v)", kUV);
  const Jet2 j = eval_jet2(e, Jet2::seed_u(0.3), Jet2::seed_v(0.1));
  const auto fd = fd_oracle([&](double u, double v) { return evaluate(e, std::array{u, v}); }, 0.3, 0.1);
  EXPECT_NEAR(j.c10, fd.d10, 1e-5);
  EXPECT_NEAR(j.c01, fd.d01, 1e-5);
  EXPECT_NEAR(j.c20, fd.d20, 1e-5);
  EXPECT_NEAR(j.c11, fd.d11, 1e-5);
  EXPECT_NEAR(j.c02, fd.d02, 1e-5);
}

TEST(EvalJet2, UnivariateExpressionAcceptsOneJet) {
  const Expr e = Expr::parse("u^2", kU);
  const std::array<Jet2, 1> at1{Jet2::seed_v(3.0)};
  EXPECT_EQ(eval_jet2(e, at1), (Jet2{9.0, 0.0, 6.0, 0.0, 0.0, 2.0}));
}

TEST(ExprProperty, RandomUnivariateJetsMatchOracle) {
  const auto corpus = corpus::univariate_corpus(1000, 2024);
  int bad = 0;
  for (const auto& c : corpus) {
    const Jet1 j = eval_jet1(c.e, Jet1::seed(c.at));
    const auto fd = fd_oracle([&](double u) { return at(c.e, u); }, c.at, corpus::oracle_steps());
    const bool ok = corpus::oracle_close(j.c1, fd.d1) && corpus::oracle_close(j.c2, fd.d2) &&
                    corpus::oracle_close(j.c3, fd.d3);
    if (!ok && ++bad < 5) {
      ADD_FAILURE() << c.e.to_string() << " at " << c.at << ": " << j.c1 << " " << j.c2 << " " << j.c3
                    << " vs " << fd.d1 << " " << fd.d2 << " " << fd.d3;
    }
  }
  EXPECT_EQ(bad, 0);
}

TEST(ExprProperty, RandomBivariateJetsMatchOracle) {
  const auto corpus = corpus::bivariate_corpus(1000, 2025);
  int bad = 0;
  for (const auto& c : corpus) {
    const Jet2 j = eval_jet2(c.e, Jet2::seed_u(c.u), Jet2::seed_v(c.v));
    const auto fd = fd_oracle([&](double u, double v) { return evaluate(c.e, std::array{u, v}); }, c.u, c.v,
                              corpus::oracle_steps());
    const bool ok = corpus::oracle_close(j.c10, fd.d10) && corpus::oracle_close(j.c01, fd.d01) &&
                    corpus::oracle_close(j.c20, fd.d20) && corpus::oracle_close(j.c11, fd.d11) &&
                    corpus::oracle_close(j.c02, fd.d02);
    if (!ok && ++bad < 5) ADD_FAILURE() << c.e.to_string() << " at (" << c.u << ", " << c.v << ")";
  }
  EXPECT_EQ(bad, 0);
}

TEST(ExprProperty, EvaluationIsBitwiseDeterministic) {
  const auto corpus = corpus::bivariate_corpus(200, 31);
  for (const auto& c : corpus) {
    const Jet2 a = eval_jet2(c.e, Jet2::seed_u(c.u), Jet2::seed_v(c.v));
    const Jet2 b = eval_jet2(c.e, Jet2::seed_u(c.u), Jet2::seed_v(c.v));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.c20), std::bit_cast<std::uint64_t>(b.c20));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.c11), std::bit_cast<std::uint64_t>(b.c11));
  }
}

TEST(Expr, SubstituteComposes) {
  const Expr f = Expr::parse("sin(t)^2", {"t"});
  const Expr arg = Expr::parse("u + 2*v", kUV);
  const Expr g = f.substitute(std::array{arg});
  EXPECT_EQ(g.variables(), kUV);
  EXPECT_DOUBLE_EQ(evaluate(g, std::array{0.1, 0.2}), std::pow(std::sin(0.5), 2.0));
  EXPECT_THROW(f.substitute(std::array{arg, arg}), PreconditionError);
}

TEST(Expr, MixedVariableListsRejected) {
  EXPECT_THROW(Expr::variable("u", kU) + Expr::variable("u", kUV), PreconditionError);
}

TEST(Expr, ExternalFunctionNode) {
  // a cubic Hermite through t^2 with exact slopes reproduces it
  std::vector<double> ys, ds;
  for (int k = 0; k <= 10; ++k) {
    const double t = 0.1 * k;
    ys.push_back(t * t);
    ds.push_back(2.0 * t);
  }
  auto h = std::make_shared<CubicHermite>(0.0, 0.1, ys, ds, "sq");
  const Expr e = galileo::apply(h, Expr::variable("u", kU)) + 1.0;
  EXPECT_EQ(e.to_string(), "(sq(u) + 1)");
  const Jet1 j = eval_jet1(e, Jet1::seed(0.55));
  EXPECT_NEAR(j.c0, 0.55 * 0.55 + 1.0, 1e-14);
  EXPECT_NEAR(j.c1, 1.1, 1e-13);
  EXPECT_NEAR(j.c2, 2.0, 1e-11);
  EXPECT_THROW(eval_jet1(e, Jet1::seed(1.5)), EvalError);
}
