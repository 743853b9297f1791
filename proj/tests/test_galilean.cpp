#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "galileo/error.hpp"
#include "galileo/galilean.hpp"
#include "support/corpus.hpp"

using namespace galileo;

namespace {

void expect_point(const Point3& p, const Point3& q, double tol) {
  EXPECT_NEAR(p.x, q.x, tol);
  EXPECT_NEAR(p.y, q.y, tol);
  EXPECT_NEAR(p.z, q.z, tol);
}

}  // namespace

TEST(Distance, FirstCoordinatesDiffer) { EXPECT_EQ(distance({1, 2, 3}, {4, 0, 0}), 3.0); }

TEST(Distance, EuclideanWhenFirstCoordinatesAgree) {
  EXPECT_EQ(distance({0, 3, 4}, {0, 0, 0}), 5.0);
  EXPECT_EQ(distance({2, 3, 4}, {2, 0, 0}), 5.0);
}

TEST(Distance, MixedCase) { EXPECT_EQ(distance({0, 1, 1}, {2, 5, 5}), 2.0); }

TEST(Classify, Vectors) {
  EXPECT_EQ(classify_vector({0, 1, 2}), Isotropy::isotropic);
  EXPECT_EQ(classify_vector({1, 0, 0}), Isotropy::non_isotropic);
  EXPECT_EQ(classify_vector({1e-300, 1, 1}), Isotropy::non_isotropic);
  EXPECT_THROW(classify_vector({0, 0, 0}), PreconditionError);
  EXPECT_TRUE(is_isotropic({1e-13, 1, 1}));
  EXPECT_FALSE(is_isotropic({1e-11, 1, 1}));
}

TEST(Motion, Identity) { EXPECT_EQ(GalileanMotion::identity().apply(Point3{1, 2, 3}), (Point3{1, 2, 3})); }

TEST(Motion, QuarterTurn) {
  GalileanMotion m;
  m.theta = std::numbers::pi / 2;
  expect_point(m.apply(Point3{1, 2, 3}), {1, 3, -2}, 1e-15);
}

TEST(Motion, ShearAndTranslation) {
  GalileanMotion m;
  m.a = 1;
  m.c = 2;
  EXPECT_EQ(m.apply(Point3{1, 1, 0}), (Point3{2, 3, 0}));
}

TEST(Motion, VectorsIgnoreTranslation) {
  GalileanMotion m{5, 6, 1, 7, -1, 0.3};
  const Vector3 v{0, 1, 2};
  const Vector3 w = m.apply(v);
  EXPECT_EQ(w.x, 0.0);
  EXPECT_NEAR(std::hypot(w.y, w.z), std::hypot(1.0, 2.0), 1e-15);
}

TEST(MotionProperty, ComposeMatchesSequentialApplication) {
  corpus::Rng r(1);
  for (int k = 0; k < 1000; ++k) {
    const GalileanMotion m1 = corpus::random_motion(r), m2 = corpus::random_motion(r);
    const Point3 p = corpus::random_point(r);
    expect_point(compose(m1, m2).apply(p), m1.apply(m2.apply(p)), 1e-12);
  }
}

TEST(MotionProperty, InverseComposesToIdentity) {
  corpus::Rng r(2);
  for (int k = 0; k < 1000; ++k) {
    const GalileanMotion m = corpus::random_motion(r);
    const Point3 p = corpus::random_point(r);
    expect_point(compose(m, m.inverse()).apply(p), p, 1e-12);
    expect_point(compose(m.inverse(), m).apply(p), p, 1e-12);
  }
}

TEST(MotionProperty, DistanceInvariant) {
  corpus::Rng r(3);
  for (int k = 0; k < 1000; ++k) {
    const GalileanMotion m = corpus::random_motion(r);
    const Point3 p = corpus::random_point(r);
    Point3 q = corpus::random_point(r);
    if (k % 2 == 0) q.x = p.x;  // exercise the Euclidean branch too
    const double before = distance(p, q);
    EXPECT_NEAR(distance(m.apply(p), m.apply(q)), before, 1e-12 * std::max(1.0, before));
  }
}

TEST(MotionProperty, IsotropicVectorsStayIsotropic) {
  corpus::Rng r(4);
  for (int k = 0; k < 200; ++k) {
    const GalileanMotion m = corpus::random_motion(r);
    const Vector3 v{0.0, r.uniform(-1, 1), r.uniform(-1, 1)};
    EXPECT_EQ(classify_vector(m.apply(v)), Isotropy::isotropic);
  }
}
