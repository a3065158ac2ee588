#pragma once

#include "sixsplit/cp1/sphere_point.hpp"

namespace sixsplit::cp1 {

/// Fractional-linear map z -> (a z + b) / (c z + d), stored with |ad - bc| = 1.
class MobiusMap {
 public:
  /// Throws std::invalid_argument when ad - bc == 0 or a coefficient is not finite.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// z -> scale * z + shift.
  static MobiusMap affine(Complex scale, Complex shift) { return {scale, shift, 0.0, 1.0}; }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  SpherePoint operator()(const SpherePoint& p) const;
  Complex operator()(Complex z) const;  // caller guarantees a finite image

  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }
  /// Coefficients conjugated: the map conj o m o conj.
  MobiusMap conjugated() const;

  /// Composition: (f * g)(z) = f(g(z)).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

 private:
  Complex a_, b_, c_, d_;
};

SpherePoint mobius_apply(const MobiusMap& m, const SpherePoint& p);

/// The unique map sending p1, p2, p3 to q1, q2, q3.
/// Throws std::invalid_argument if either triple has coincident points.
MobiusMap mobius_from_three_points(const SpherePoint& p1, const SpherePoint& p2,
                                   const SpherePoint& p3, const SpherePoint& q1,
                                   const SpherePoint& q2, const SpherePoint& q3);

/// Rotation of the sphere (unitary map) that sends p to infinity.
MobiusMap rotation_to_infinity(const SpherePoint& p);

}  // namespace sixsplit::cp1
