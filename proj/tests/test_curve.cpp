#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "galileo/curve.hpp"
#include "galileo/error.hpp"
#include "support/corpus.hpp"

using namespace galileo;

namespace {

Curve curve(const char* x, const char* y, const char* z, Interval d = {-1.0, 1.0}, const char* var = "u") {
  return Curve::parse(x, y, z, var, d);
}

const double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST(Curve, RejectsBadConstruction) {
  EXPECT_THROW(curve("u", "u", "u", {1.0, 1.0}), PreconditionError);
  EXPECT_THROW(curve("u", "u", "u", {0.0, INFINITY}), PreconditionError);
  EXPECT_THROW(Curve(Expr::parse("u", {"u"}), Expr::parse("s", {"s"}), Expr::parse("u", {"u"}), {0, 1}),
               PreconditionError);
}

TEST(CurveAdmissible, Helix) { EXPECT_TRUE(is_admissible(curve("u", "cos(u)", "sin(u)", {0.0, kTwoPi})).admissible); }

TEST(CurveAdmissible, IsotropicCurve) {
  const auto a = is_admissible(curve("0", "s", "s^2", {-1, 1}, "s"));
  EXPECT_FALSE(a.admissible);
  ASSERT_TRUE(a.witness);
}

TEST(CurveAdmissible, SignChangeBetweenNodes) {
  const auto a = is_admissible(curve("sin(u)", "u", "0", {-1.0, 2.0}));
  EXPECT_FALSE(a.admissible);
  ASSERT_TRUE(a.witness);
  EXPECT_NEAR(*a.witness, std::numbers::pi / 2, 1e-9);
}

TEST(Curvature, Helix) {
  const Curve c = curve("u", "cos(u)", "sin(u)", {0.0, kTwoPi});
  for (double s : {0.0, 1.0, 2.5, 6.0}) EXPECT_NEAR(curvature(c, s), 1.0, 1e-15);
}

TEST(Curvature, TwistedCubic) { EXPECT_NEAR(curvature(curve("u", "u^2", "u^3"), 1.0), std::sqrt(40.0), 1e-14); }

TEST(Curvature, Line) { EXPECT_EQ(curvature(curve("u", "3*u+1", "7"), 0.3), 0.0); }

TEST(Curvature, NeedsUnitSpeed) {
  EXPECT_THROW(curvature(curve("2*u", "u", "u"), 0.0), PreconditionError);
  EXPECT_NO_THROW(curvature(curve("-u", "u", "u^2"), 0.0));
}

TEST(Torsion, Helix) {
  const Curve c = curve("u", "cos(u)", "sin(u)", {0.0, kTwoPi});
  for (double s : {0.0, 1.0, 2.5}) EXPECT_NEAR(torsion(c, s), 1.0, 1e-15);
}

TEST(Torsion, TwistedCubic) { EXPECT_NEAR(torsion(curve("u", "u^2", "u^3"), 1.0), 0.3, 1e-15); }

TEST(Torsion, PlanarCurve) {
  const Curve c = curve("u", "u^2", "0");
  for (double s : {-0.7, 0.0, 0.4}) EXPECT_EQ(torsion(c, s), 0.0);
}

TEST(Torsion, StraightLineIsDegenerate) { EXPECT_THROW(torsion(curve("u", "u", "2*u"), 0.0), DegenerateError); }

TEST(Planarity, Classifications) {
  EXPECT_EQ(classify_planarity(curve("u", "u^2", "0")).kind, Planarity::planar);
  EXPECT_EQ(classify_planarity(curve("u", "u^2", "u^3", {0.5, 2.0})).kind, Planarity::space);
  EXPECT_EQ(classify_planarity(curve("u", "u^2", "u^4")).kind, Planarity::mixed);
  EXPECT_EQ(classify_planarity(curve("u", "2*u", "u")).kind, Planarity::planar);
  EXPECT_TRUE(is_planar(curve("u", "sin(u)", "0")));
  EXPECT_TRUE(is_space_curve(curve("u", "cos(u)", "sin(u)")));
  EXPECT_FALSE(is_space_curve(curve("u", "u^2", "u^4")));
  EXPECT_FALSE(is_planar(curve("u", "u^2", "u^4")));
}

TEST(Planarity, MixedReportsZeroAndNonzero) {
  const auto r = classify_planarity(curve("u", "u^2", "u^4"));
  EXPECT_LT(r.min_abs_torsion, kPlanarityTolerance);
  EXPECT_GT(r.max_abs_torsion, kPlanarityTolerance);
  EXPECT_NEAR(torsion(curve("u", "u^2", "u^4"), 1.0), 48.0 / (4.0 + 144.0), 1e-14);
}

TEST(UnitSpeed, Circle) {
  const auto r = check_isotropic_unit_speed(curve("0", "sin(v)", "cos(v)", {-1, 1}, "v"));
  EXPECT_TRUE(r.unit_speed);
  EXPECT_LT(r.max_residual, 1e-15);
}

TEST(UnitSpeed, DiagonalLineFails) {
  const auto r = check_isotropic_unit_speed(curve("0", "v", "v", {-1, 1}, "v"));
  EXPECT_FALSE(r.unit_speed);
  EXPECT_EQ(r.max_residual, 1.0);
}

TEST(UnitSpeed, ArcSineProfile) {
  const auto r = check_isotropic_unit_speed(curve("0", "v/2*sqrt(1-v^2)+asin(v)/2", "v^2/2", {-0.9, 0.9}, "v"));
  EXPECT_TRUE(r.unit_speed);
  EXPECT_LT(r.max_residual, 1e-9);
  EXPECT_LT(r.max_identity_residual, 1e-9);
}

TEST(UnitSpeed, NeedsIsotropicCurve) {
  EXPECT_THROW(check_isotropic_unit_speed(curve("u", "sin(u)", "cos(u)")), PreconditionError);
}

TEST(CurveProperty, InvariantsUnderMotions) {
  const Curve cs[] = {curve("u", "cos(u)", "sin(u)"), curve("u", "u^2", "u^3", {0.5, 2.0}),
                      curve("-u", "exp(u)", "u^3 - u", {-1, 1}), curve("u + 2", "sin(2*u)", "u^2", {-1, 1})};
  corpus::Rng r(5);
  for (const Curve& c : cs) {
    for (int k = 0; k < 50; ++k) {
      const GalileanMotion m = corpus::random_motion(r);
      const Curve t = c.transformed(m);
      for (double s : uniform_grid(c.domain(), 7)) {
        EXPECT_NEAR(curvature(t, s), curvature(c, s), 1e-9);
        EXPECT_NEAR(torsion(t, s), torsion(c, s), 1e-9);
      }
    }
  }
}

TEST(CurveProperty, CurvatureMatchesOracle) {
  const Curve cs[] = {curve("u", "cos(u)", "sin(u)"), curve("u", "u^2", "u^3", {0.5, 2.0}),
                      curve("u", "atan(u)", "exp(u/2)"), curve("-u", "log(2+u)", "sinh(u)")};
  for (const Curve& c : cs) {
    for (double s : uniform_grid(c.domain(), 9)) {
      auto coord = [&](const Expr& e) {
        return fd_oracle([&](double t) { return evaluate(e, std::array{t}); }, s, corpus::oracle_steps());
      };
      const auto y = coord(c.y()), z = coord(c.z());
      EXPECT_NEAR(curvature(c, s), std::hypot(y.d2, z.d2), 1e-6);
    }
  }
}

TEST(CurveProperty, ZeroThirdCoordinateMeansZeroTorsion) {
  const auto corpus_ = corpus::univariate_corpus(100, 77, 4);
  for (const auto& c : corpus_) {
    const Curve k(Expr::parse("u", {"u"}), c.e, Expr::constant(0.0, {"u"}), {-1, 1});
    try {
      EXPECT_EQ(torsion(k, c.at), 0.0);
    } catch (const DegenerateError&) {
    }
  }
}

TEST(Curve, ShiftReparametrizes) {
  const Curve c = curve("u", "u^2", "u^3", {0.0, 1.0});
  const Curve s = c.shifted(0.25);
  EXPECT_NEAR(s.domain().lo, 0.25, 1e-15);
  EXPECT_NEAR(s.domain().hi, 1.25, 1e-15);
  EXPECT_NEAR(curvature(s, 1.25), curvature(c, 1.0), 1e-13);
}
