#include "sixsplit/cp1/mobius.hpp"

#include <array>
#include <stdexcept>

namespace sixsplit::cp1 {

namespace {

bool finite_complex(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Homogeneous coordinates (x : y) with z = x / y.
using Homogeneous = std::array<Complex, 2>;

Homogeneous homogeneous(const SpherePoint& p) {
  if (p.is_infinity()) return {1.0, 0.0};
  return {p.value(), 1.0};
}

// Matrix sending p1 -> 0, p2 -> 1, p3 -> infinity.
MobiusMap to_standard_frame(const SpherePoint& p1, const SpherePoint& p2,
                            const SpherePoint& p3) {
  if (p1 == p2 || p2 == p3 || p1 == p3) {
    throw std::invalid_argument("mobius_from_three_points: coincident points");
  }
  const Homogeneous h1 = homogeneous(p1);
  const Homogeneous h2 = homogeneous(p2);
  const Homogeneous h3 = homogeneous(p3);
  // Row 1 annihilates h1, row 2 annihilates h3; scales make h2 -> (1 : 1).
  const Complex k1 = h3[1] * h2[0] - h3[0] * h2[1];
  const Complex k2 = h1[1] * h2[0] - h1[0] * h2[1];
  return {k1 * h1[1], -k1 * h1[0], k2 * h3[1], -k2 * h3[0]};
}

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) {
  if (!finite_complex(a) || !finite_complex(b) || !finite_complex(c) || !finite_complex(d)) {
    throw std::invalid_argument("MobiusMap: non-finite coefficient");
  }
  const Complex det = a * d - b * c;
  const double mag = std::abs(det);
  if (!(mag > 0.0) || !std::isfinite(mag)) {
    throw std::invalid_argument("MobiusMap: singular coefficients");
  }
  const double s = 1.0 / std::sqrt(mag);
  a_ = a * s;
  b_ = b * s;
  c_ = c * s;
  d_ = d * s;
}

SpherePoint MobiusMap::operator()(const SpherePoint& p) const {
  if (p.is_infinity()) {
    if (c_ == Complex(0.0, 0.0)) return SpherePoint::infinity();
    return SpherePoint::finite(a_ / c_);
  }
  const Complex z = p.value();
  const Complex den = c_ * z + d_;
  if (den == Complex(0.0, 0.0)) return SpherePoint::infinity();
  const Complex w = (a_ * z + b_) / den;
  if (!finite_complex(w)) return SpherePoint::infinity();
  return SpherePoint::finite(w);
}

Complex MobiusMap::operator()(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

MobiusMap MobiusMap::conjugated() const {
  return {std::conj(a_), std::conj(b_), std::conj(c_), std::conj(d_)};
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
          f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_};
}

SpherePoint mobius_apply(const MobiusMap& m, const SpherePoint& p) { return m(p); }

MobiusMap mobius_from_three_points(const SpherePoint& p1, const SpherePoint& p2,
                                   const SpherePoint& p3, const SpherePoint& q1,
                                   const SpherePoint& q2, const SpherePoint& q3) {
  const MobiusMap from_p = to_standard_frame(p1, p2, p3);
  const MobiusMap from_q = to_standard_frame(q1, q2, q3);
  return from_q.inverse() * from_p;
}

MobiusMap rotation_to_infinity(const SpherePoint& p) {
  if (p.is_infinity()) return MobiusMap::identity();
  const Complex z = p.value();
  // Unitary matrix [[conj(z), 1], [-1, z]]: pole at z, antipode -1/conj(z) -> 0.
  return {std::conj(z), 1.0, -1.0, z};
}

}  // namespace sixsplit::cp1
