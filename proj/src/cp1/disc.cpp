#include "sixsplit/cp1/disc.hpp"

#include <stdexcept>

namespace sixsplit::cp1 {

GeneralizedDisc GeneralizedDisc::from_hermitian(double a, Complex b, double c) {
  if (!std::isfinite(a) || !std::isfinite(c) || !std::isfinite(b.real()) ||
      !std::isfinite(b.imag())) {
    throw std::invalid_argument("GeneralizedDisc: non-finite coefficient");
  }
  const double scale = std::sqrt(a * a + 2.0 * std::norm(b) + c * c);
  if (!(scale > 0.0)) throw std::invalid_argument("GeneralizedDisc: zero form");
  a /= scale;
  b /= scale;
  c /= scale;
  if (!(std::norm(b) - a * c > 0.0)) {
    throw std::invalid_argument("GeneralizedDisc: degenerate boundary circle");
  }
  return {a, b, c};
}

GeneralizedDisc GeneralizedDisc::disk(Complex center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk: radius must be positive");
  return from_hermitian(1.0, -center, std::norm(center) - radius * radius);
}

GeneralizedDisc GeneralizedDisc::codisk(Complex center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("codisk: radius must be positive");
  return from_hermitian(-1.0, center, radius * radius - std::norm(center));
}

GeneralizedDisc GeneralizedDisc::half_plane(Complex normal, double offset) {
  const double len = std::abs(normal);
  if (!(len > 0.0)) throw std::invalid_argument("half_plane: zero normal");
  return from_hermitian(0.0, -normal / len, 2.0 * offset / len);
}

double GeneralizedDisc::evaluate(Complex z) const {
  return a_ * std::norm(z) + 2.0 * (b_.real() * z.real() + b_.imag() * z.imag()) + c_;
}

DiscKind GeneralizedDisc::kind(double flat_tolerance) const {
  if (std::abs(a_) <= flat_tolerance) return DiscKind::HalfPlane;
  return a_ > 0.0 ? DiscKind::Disk : DiscKind::Codisk;
}

double GeneralizedDisc::radius() const {
  return std::sqrt(std::norm(b_) - a_ * c_) / std::abs(a_);
}

GeneralizedDisc disc_pushforward(const MobiusMap& m, const GeneralizedDisc& d) {
  // H' = N^* H N with N the matrix of the inverse map.
  const MobiusMap n = m.inverse();
  const Complex n11 = n.a(), n12 = n.b(), n21 = n.c(), n22 = n.d();
  const Complex h11 = d.A(), h12 = d.B(), h21 = std::conj(d.B()), h22 = d.C();
  // H N
  const Complex g11 = h11 * n11 + h12 * n21;
  const Complex g12 = h11 * n12 + h12 * n22;
  const Complex g21 = h21 * n11 + h22 * n21;
  const Complex g22 = h21 * n12 + h22 * n22;
  const Complex a = std::conj(n11) * g11 + std::conj(n21) * g21;
  const Complex b = std::conj(n11) * g12 + std::conj(n21) * g22;
  const Complex c = std::conj(n12) * g12 + std::conj(n22) * g22;
  return GeneralizedDisc::from_hermitian(a.real(), b, c.real());
}

GeneralizedDisc conjugate(const GeneralizedDisc& d) {
  return GeneralizedDisc::from_hermitian(d.A(), std::conj(d.B()), d.C());
}

Containment disc_contains(const GeneralizedDisc& d, const SpherePoint& p) {
  double value = 0.0;
  if (p.is_infinity()) {
    const SphericalCap cap = disc_to_cap(d);
    value = angle_between(cap.center, Vec3{0.0, 0.0, 1.0}) - cap.angular_radius;
  } else {
    // h(z) / (1 + |z|^2) = (n . P + A + C) / 2 on the sphere; bounded for all z.
    const Vec3 s = p.to_sphere();
    value = 0.5 * (2.0 * d.B().real() * s[0] + 2.0 * d.B().imag() * s[1] +
                   (d.A() - d.C()) * s[2] + (d.A() + d.C()));
  }
  Location where = Location::Boundary;
  if (value < -kBoundaryBand) where = Location::Inside;
  if (value > kBoundaryBand) where = Location::Outside;
  return {value, where};
}

Disjointness discs_disjoint(const GeneralizedDisc& d1, const GeneralizedDisc& d2) {
  const SphericalCap c1 = disc_to_cap(d1);
  const SphericalCap c2 = disc_to_cap(d2);
  const double sep =
      angle_between(c1.center, c2.center) - c1.angular_radius - c2.angular_radius;
  return {sep > 0.0, sep};
}

SphericalCap disc_to_cap(const GeneralizedDisc& d) {
  // Membership is n . P + (A + C) <= 0 with n = (2 Re B, 2 Im B, A - C).
  const Vec3 n{2.0 * d.B().real(), 2.0 * d.B().imag(), d.A() - d.C()};
  const Vec3 center = normalized(Vec3{-n[0], -n[1], -n[2]});
  const double disc = std::sqrt(std::max(0.0, std::norm(d.B()) - d.A() * d.C()));
  return {center, std::atan2(2.0 * disc, d.A() + d.C())};
}

GeneralizedDisc cap_to_disc(const SphericalCap& c) {
  const Vec3 u = normalized(c.center);
  const double cr = std::cos(c.angular_radius);
  return GeneralizedDisc::from_hermitian(0.5 * (cr - u[2]), Complex(-0.5 * u[0], -0.5 * u[1]),
                                         0.5 * (cr + u[2]));
}

double cap_distance(const SphericalCap& a, const SphericalCap& b) {
  return angle_between(a.center, b.center) + std::abs(a.angular_radius - b.angular_radius);
}

}  // namespace sixsplit::cp1
