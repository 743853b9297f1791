#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "galileo/error.hpp"
#include "galileo/jets.hpp"
#include "support/corpus.hpp"

using namespace galileo;

namespace {

void expect_jet(const Jet1& j, double c0, double c1, double c2, double c3, double tol = 1e-15) {
  EXPECT_NEAR(j.c0, c0, tol);
  EXPECT_NEAR(j.c1, c1, tol);
  EXPECT_NEAR(j.c2, c2, tol);
  EXPECT_NEAR(j.c3, c3, tol);
}

}  // namespace

TEST(Jet1, Seeds) {
  EXPECT_EQ(Jet1::seed(2.5), (Jet1{2.5, 1.0, 0.0, 0.0}));
  EXPECT_EQ(Jet1::constant(2.5), (Jet1{2.5, 0.0, 0.0, 0.0}));
  EXPECT_EQ(Jet2::seed_u(3.0), (Jet2{3.0, 1.0, 0.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(Jet2::seed_v(3.0), (Jet2{3.0, 0.0, 1.0, 0.0, 0.0, 0.0}));
}

TEST(Jet1, SquareAtTwo) {
  const Jet1 x = Jet1::seed(2.0);
  EXPECT_EQ(x * x, (Jet1{4.0, 4.0, 2.0, 0.0}));
}

TEST(Jet1, SinAtZero) { expect_jet(compose(Elementary::sin, Jet1::seed(0.0)), 0.0, 1.0, 0.0, -1.0); }

TEST(Jet1, QuotientMatchesHandDerivatives) {
  // u e^{-u}: (u - 0) e^{-u}; d1 = (1 - u) e^{-u}, d2 = (u - 2) e^{-u}, d3 = (3 - u) e^{-u}
  const Jet1 q = Jet1::seed(1.0) / compose(Elementary::exp, Jet1::seed(1.0));
  const double ie = std::exp(-1.0);
  expect_jet(q, ie, 0.0, -ie, 2.0 * ie, 1e-15);
  const auto fd = fd_oracle([](double u) { return u * std::exp(-u); }, 1.0, corpus::oracle_steps());
  EXPECT_NEAR(q.c1, fd.d1, 1e-7);
  EXPECT_NEAR(q.c2, fd.d2, 1e-7);
  EXPECT_NEAR(q.c3, fd.d3, 1e-7);
}

TEST(Jet1, DivisionByZeroThrows) {
  EXPECT_THROW(Jet1::seed(1.0) / Jet1::seed(0.0), EvalError);
  EXPECT_THROW(Jet2::seed_u(1.0) / Jet2::constant(0.0), EvalError);
}

TEST(Jet1, DomainErrors) {
  EXPECT_THROW(compose(Elementary::log, Jet1::seed(0.0)), EvalError);
  EXPECT_THROW(compose(Elementary::sqrt, Jet1::seed(-1.0)), EvalError);
  EXPECT_THROW(compose(Elementary::asin, Jet1::seed(1.5)), EvalError);
  // value exists at the boundary but the derivative does not
  EXPECT_THROW(compose(Elementary::sqrt, Jet1::seed(0.0)), EvalError);
  EXPECT_THROW(compose(Elementary::asin, Jet1::seed(1.0)), EvalError);
}

TEST(Jet1, ElementaryTablesAgainstOracle) {
  struct Case {
    Elementary fn;
    double (*f)(double);
    double at;
  };
  const Case cases[] = {
      {Elementary::sin, [](double x) { return std::sin(x); }, 0.7},
      {Elementary::cos, [](double x) { return std::cos(x); }, 0.7},
      {Elementary::tan, [](double x) { return std::tan(x); }, 0.4},
      {Elementary::asin, [](double x) { return std::asin(x); }, 0.3},
      {Elementary::atan, [](double x) { return std::atan(x); }, -1.2},
      {Elementary::exp, [](double x) { return std::exp(x); }, 0.5},
      {Elementary::log, [](double x) { return std::log(x); }, 1.7},
      {Elementary::sqrt, [](double x) { return std::sqrt(x); }, 2.3},
      {Elementary::sinh, [](double x) { return std::sinh(x); }, -0.6},
      {Elementary::cosh, [](double x) { return std::cosh(x); }, 0.9},
  };
  for (const auto& c : cases) {
    const auto d = elementary_derivatives(c.fn, c.at, 3);
    const auto fd = fd_oracle(c.f, c.at, corpus::oracle_steps());
    SCOPED_TRACE(std::string(name_of(c.fn)));
    EXPECT_DOUBLE_EQ(d[0], c.f(c.at));
    EXPECT_TRUE(corpus::oracle_close(d[1], fd.d1)) << d[1] << " vs " << fd.d1;
    EXPECT_TRUE(corpus::oracle_close(d[2], fd.d2)) << d[2] << " vs " << fd.d2;
    EXPECT_TRUE(corpus::oracle_close(d[3], fd.d3)) << d[3] << " vs " << fd.d3;
  }
}

TEST(Jet1, OrderTruncates) {
  const auto d = elementary_derivatives(Elementary::exp, 0.0, 1);
  EXPECT_EQ(d[2], 0.0);
  EXPECT_EQ(d[3], 0.0);
}

TEST(Jet1, PowIntMatchesRepeatedProduct) {
  const Jet1 x{1.3, 0.7, -0.2, 0.4};
  const Jet1 cube = x * x * x;
  const Jet1 p = pow_int(x, 3);
  EXPECT_NEAR(p.c0, cube.c0, 1e-14);
  EXPECT_NEAR(p.c3, cube.c3, 1e-13);
  const Jet1 inv = pow_int(x, -2);
  const Jet1 ref = Jet1::constant(1.0) / (x * x);
  EXPECT_NEAR(inv.c2, ref.c2, 1e-13);
  EXPECT_EQ(pow_int(x, 0), Jet1::constant(1.0));
}

TEST(Jet1, CommutativityAndIdentityExact) {
  corpus::Rng r(7);
  for (int k = 0; k < 200; ++k) {
    const Jet1 a{r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3)};
    const Jet1 b{r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3)};
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * Jet1::constant(1.0), a);
    EXPECT_EQ((a * b).c1, a.c1 * b.c0 + a.c0 * b.c1);
  }
}

TEST(Jet2, CommutativityAndIdentityExact) {
  corpus::Rng r(8);
  for (int k = 0; k < 200; ++k) {
    Jet2 a, b;
    for (double* p : {&a.c00, &a.c10, &a.c01, &a.c20, &a.c11, &a.c02}) *p = r.uniform(-3, 3);
    for (double* p : {&b.c00, &b.c10, &b.c01, &b.c20, &b.c11, &b.c02}) *p = r.uniform(-3, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * Jet2::constant(1.0), a);
    EXPECT_EQ((a * b).c10, a.c10 * b.c00 + a.c00 * b.c10);
    EXPECT_EQ((a * b).c01, a.c01 * b.c00 + a.c00 * b.c01);
  }
}

TEST(Jet2, BilinearProduct) {
  const Jet2 p = Jet2::seed_u(1.0) * Jet2::seed_v(2.0);
  EXPECT_EQ(p, (Jet2{2.0, 2.0, 1.0, 0.0, 1.0, 0.0}));
}

TEST(Jet2, DoubledSeed) {
  EXPECT_EQ(Jet2::seed_u(3.0) + Jet2::seed_u(3.0), (Jet2{6.0, 2.0, 0.0, 0.0, 0.0, 0.0}));
}

TEST(Jet2, SqrtOfRadius) {
  const Jet2 u = Jet2::seed_u(3.0), v = Jet2::seed_v(4.0);
  const Jet2 r = compose(Elementary::sqrt, u * u + v * v);
  EXPECT_DOUBLE_EQ(r.c00, 5.0);
  EXPECT_DOUBLE_EQ(r.c10, 0.6);
  EXPECT_DOUBLE_EQ(r.c01, 0.8);
  const auto fd = fd_oracle([](double a, double b) { return std::hypot(a, b); }, 3.0, 4.0,
                            corpus::oracle_steps());
  EXPECT_NEAR(r.c20, fd.d20, 1e-6);
  EXPECT_NEAR(r.c11, fd.d11, 1e-6);
  EXPECT_NEAR(r.c02, fd.d02, 1e-6);
}

TEST(FdOracle, CubicSecondDerivative) {
  FdSteps s;
  s.second = 1e-4;
  EXPECT_NEAR(fd_oracle([](double u) { return u * u * u; }, 1.0, s).d2, 6.0, 1e-4);
}

TEST(FdOracle, ConstantHasNoDerivatives) {
  const auto d = fd_oracle([](double) { return 7.0; }, 0.3);
  EXPECT_NEAR(d.d1, 0.0, 1e-9);
  EXPECT_NEAR(d.d2, 0.0, 1e-9);
  EXPECT_NEAR(d.d3, 0.0, 1e-9);
  const auto d2 = fd_oracle([](double, double) { return 7.0; }, 0.3, -0.2);
  EXPECT_NEAR(d2.d11, 0.0, 1e-9);
}

TEST(FdOracle, SineFirstDerivative) {
  EXPECT_NEAR(fd_oracle([](double u) { return std::sin(u); }, 0.5).d1, std::cos(0.5), 1e-9);
}

TEST(FdOracle, RejectsBadStepsAndDomainExits) {
  FdSteps s;
  s.first = 0.0;
  EXPECT_THROW(fd_oracle([](double u) { return u; }, 0.0, s), PreconditionError);
  auto f = [](double u) {
    if (u < 0.0) throw EvalError("sqrt of negative", "sqrt(u)", {u});
    return std::sqrt(u);
  };
  EXPECT_THROW(fd_oracle(f, 0.0), EvalError);
}
