#include "sixsplit/cp1/sphere_point.hpp"

#include <stdexcept>

namespace sixsplit::cp1 {

SpherePoint SpherePoint::finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("SpherePoint: non-finite coordinate");
  }
  return SpherePoint(z, false);
}

SpherePoint SpherePoint::from_sphere(const Vec3& p) {
  const Vec3 u = normalized(p);
  const double rho2 = u[0] * u[0] + u[1] * u[1];
  if (u[2] <= 0.0) {
    return finite(Complex(u[0], u[1]) / (1.0 - u[2]));
  }
  // (1 - Z)(1 + Z) = X^2 + Y^2 keeps precision near the north pole.
  if (rho2 == 0.0) return infinity();
  const Complex z = Complex(u[0], u[1]) * ((1.0 + u[2]) / rho2);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return infinity();
  return finite(z);
}

Vec3 SpherePoint::to_sphere() const {
  if (infinite_) return {0.0, 0.0, 1.0};
  const double m2 = std::norm(z_);
  if (m2 > 1.0) {
    // Divide through by |z|^2 so huge values do not overflow.
    const double inv = 1.0 / m2;
    const double den = 1.0 + inv;
    return {2.0 * z_.real() * inv / den, 2.0 * z_.imag() * inv / den,
            (1.0 - inv) / den};
  }
  const double den = 1.0 + m2;
  return {2.0 * z_.real() / den, 2.0 * z_.imag() / den, (m2 - 1.0) / den};
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  const Vec3 u = a.to_sphere();
  const Vec3 v = b.to_sphere();
  return norm(Vec3{u[0] - v[0], u[1] - v[1], u[2] - v[2]});
}

double angular_distance(const SpherePoint& a, const SpherePoint& b) {
  return angle_between(a.to_sphere(), b.to_sphere());
}

SpherePoint conjugate(const SpherePoint& p) {
  if (p.is_infinity()) return p;
  return SpherePoint::finite(std::conj(p.value()));
}

}  // namespace sixsplit::cp1
