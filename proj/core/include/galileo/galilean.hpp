#pragma once

// Affine model of the Galilean 3-space: points, vectors, the Galilean
// distance and the six-parameter group of motions
//
//   x' = a + x
//   y' = b + c x + cos(theta) y + sin(theta) z
//   z' = d + e x - sin(theta) y + cos(theta) z
//
// The projective picture (absolute plane, absolute line, elliptic involution)
// only enters through these formulas.

namespace galileo {

struct Vector3 {
  double x = 0.0, y = 0.0, z = 0.0;
  friend bool operator==(const Vector3&, const Vector3&) = default;
};

struct Point3 {
  double x = 0.0, y = 0.0, z = 0.0;
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline Vector3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
inline Point3 operator+(const Point3& p, const Vector3& v) { return {p.x + v.x, p.y + v.y, p.z + v.z}; }

/// |y1 - x1| when the first coordinates differ, otherwise the Euclidean
/// distance of the (y, z) parts. Invariant under every motion.
double distance(const Point3& p, const Point3& q);

enum class Isotropy { isotropic, non_isotropic };

/// Exact test on the x-component. Throws PreconditionError for the zero vector.
Isotropy classify_vector(const Vector3& v);

/// Tolerance variant for numerically produced tangents: |v.x| < tol.
bool is_isotropic(const Vector3& v, double tol = 1e-12);

struct GalileanMotion {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
  double theta = 0.0;  // radians

  static GalileanMotion identity() { return {}; }

  Point3 apply(const Point3& p) const;
  /// Linear part only (no translation).
  Vector3 apply(const Vector3& v) const;
  GalileanMotion inverse() const;
};

/// The motion p -> first(second(p)).
GalileanMotion compose(const GalileanMotion& first, const GalileanMotion& second);

}  // namespace galileo
