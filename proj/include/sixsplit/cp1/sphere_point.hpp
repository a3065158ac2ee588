#pragma once

#include <complex>

#include "sixsplit/cp1/vec3.hpp"

namespace sixsplit::cp1 {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or infinity.
///
/// The sphere model is the unit sphere in R^3 with stereographic projection
/// from the north pole: z = x + iy maps to (2x, 2y, |z|^2 - 1) / (|z|^2 + 1),
/// so 0 is the south pole, the unit circle is the equator and infinity is
/// the north pole (0, 0, 1).
class SpherePoint {
 public:
  /// Throws std::invalid_argument on NaN or infinite coordinates.
  static SpherePoint finite(Complex z);
  static SpherePoint finite(double re, double im) { return finite(Complex(re, im)); }
  static SpherePoint infinity() { return SpherePoint(Complex(0.0, 0.0), true); }
  static SpherePoint from_sphere(const Vec3& p);

  bool is_infinity() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Only meaningful for finite points.
  Complex value() const { return z_; }

  Vec3 to_sphere() const;

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  SpherePoint(Complex z, bool infinite) : z_(z), infinite_(infinite) {}

  Complex z_;
  bool infinite_;
};

/// Euclidean distance in R^3 between the sphere images (in [0, 2]).
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

/// Great-circle distance between the sphere images (in [0, pi]).
double angular_distance(const SpherePoint& a, const SpherePoint& b);

/// Complex conjugation, which fixes infinity.
SpherePoint conjugate(const SpherePoint& p);

}  // namespace sixsplit::cp1
