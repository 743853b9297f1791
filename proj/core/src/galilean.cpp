#include "galileo/galilean.hpp"

#include <cmath>
#include <utility>

#include "galileo/error.hpp"

namespace galileo {

double distance(const Point3& p, const Point3& q) {
  if (p.x != q.x) return std::abs(q.x - p.x);
  return std::hypot(q.y - p.y, q.z - p.z);
}

Isotropy classify_vector(const Vector3& v) {
  if (v.x == 0.0 && v.y == 0.0 && v.z == 0.0) {
    throw PreconditionError("cannot classify the zero vector");
  }
  return v.x == 0.0 ? Isotropy::isotropic : Isotropy::non_isotropic;
}

bool is_isotropic(const Vector3& v, double tol) { return std::abs(v.x) < tol; }

Point3 GalileanMotion::apply(const Point3& p) const {
  const double cs = std::cos(theta), sn = std::sin(theta);
  return {a + p.x, b + c * p.x + cs * p.y + sn * p.z, d + e * p.x - sn * p.y + cs * p.z};
}

Vector3 GalileanMotion::apply(const Vector3& v) const {
  const double cs = std::cos(theta), sn = std::sin(theta);
  return {v.x, c * v.x + cs * v.y + sn * v.z, e * v.x - sn * v.y + cs * v.z};
}

GalileanMotion GalileanMotion::inverse() const {
  // x = x' - a; (y, z) = R(-theta) [(y', z') - (b, d) - (c, e) x]
  const double cs = std::cos(theta), sn = std::sin(theta);
  auto rot_back = [&](double y, double z) {  // R(-theta)
    return std::pair{cs * y - sn * z, sn * y + cs * z};
  };
  const auto [ci, ei] = rot_back(-c, -e);
  const auto [bi, di] = rot_back(-b + a * c, -d + a * e);
  return {-a, bi, ci, di, ei, -theta};
}

GalileanMotion compose(const GalileanMotion& m1, const GalileanMotion& m2) {
  const double cs = std::cos(m1.theta), sn = std::sin(m1.theta);
  auto rot = [&](double y, double z) { return std::pair{cs * y + sn * z, -sn * y + cs * z}; };
  const auto [rb, rd] = rot(m2.b, m2.d);
  const auto [rc, re] = rot(m2.c, m2.e);
  return {m1.a + m2.a,
          m1.b + m2.a * m1.c + rb,
          m1.c + rc,
          m1.d + m2.a * m1.e + rd,
          m1.e + re,
          m1.theta + m2.theta};
}

}  // namespace galileo
