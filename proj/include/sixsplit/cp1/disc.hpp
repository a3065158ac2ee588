#pragma once

#include <numbers>

#include "sixsplit/cp1/mobius.hpp"

namespace sixsplit::cp1 {

/// Ball on the unit sphere: points whose angle to `center` is at most
/// `angular_radius`.
struct SphericalCap {
  Vec3 center;
  double angular_radius;
};

enum class DiscKind { Disk, Codisk, HalfPlane };

/// Closed generalized disc { z : A|z|^2 + B conj(z) + conj(B) z + C <= 0 }.
///
/// A > 0 is a bounded disk, A < 0 the complement of an open disk (infinity
/// inside), A = 0 a closed half-plane with infinity on its boundary. The
/// form is scaled to A^2 + 2|B|^2 + C^2 = 1; the overall sign is part of
/// the meaning, so equal sets have equal coefficients.
class GeneralizedDisc {
 public:
  /// The closed unit disc.
  GeneralizedDisc() : a_(std::numbers::sqrt2 / 2.0), b_(0.0), c_(-std::numbers::sqrt2 / 2.0) {}

  /// Throws std::invalid_argument unless A C - |B|^2 < 0.
  static GeneralizedDisc from_hermitian(double a, Complex b, double c);
  static GeneralizedDisc disk(Complex center, double radius);
  /// { z : |z - center| >= radius } together with infinity.
  static GeneralizedDisc codisk(Complex center, double radius);
  /// { z : Re(conj(normal) z) >= offset }, normal of unit length (rescaled otherwise).
  static GeneralizedDisc half_plane(Complex normal, double offset);
  static GeneralizedDisc unit_disk() { return disk(0.0, 1.0); }

  double A() const { return a_; }
  Complex B() const { return b_; }
  double C() const { return c_; }

  /// Unnormalized form value h(z).
  double evaluate(Complex z) const;

  /// Classification with |A| below `flat_tolerance` treated as a half-plane.
  DiscKind kind(double flat_tolerance = 0.0) const;
  bool is_bounded() const { return a_ > 0.0; }
  /// Plane center and radius; requires A != 0.
  Complex center() const { return -b_ / a_; }
  double radius() const;
  /// Inward unit normal and offset of a half-plane; requires B != 0.
  Complex normal() const { return -b_ / std::abs(b_); }
  double offset() const { return c_ / (2.0 * std::abs(b_)); }

 private:
  GeneralizedDisc(double a, Complex b, double c) : a_(a), b_(b), c_(c) {}

  double a_;
  Complex b_;
  double c_;
};

enum class Location { Inside, Boundary, Outside };

struct Containment {
  double signed_value;  // negative inside
  Location location;
};

/// Half-width of the band around zero reported as Location::Boundary.
inline constexpr double kBoundaryBand = 1e-12;

/// Image of d under m: membership commutes with mobius_apply.
GeneralizedDisc disc_pushforward(const MobiusMap& m, const GeneralizedDisc& d);

/// Mirror image under complex conjugation.
GeneralizedDisc conjugate(const GeneralizedDisc& d);

/// Finite points use h(z) / (1 + |z|^2) with the normalized form; infinity
/// uses the angle from the cap center minus the cap radius.
Containment disc_contains(const GeneralizedDisc& d, const SpherePoint& p);

struct Disjointness {
  bool disjoint;
  double separation;  // angle between cap centers minus both radii
};

Disjointness discs_disjoint(const GeneralizedDisc& d1, const GeneralizedDisc& d2);

SphericalCap disc_to_cap(const GeneralizedDisc& d);
GeneralizedDisc cap_to_disc(const SphericalCap& c);

/// Angle between centers plus radius difference; zero iff the caps coincide.
double cap_distance(const SphericalCap& a, const SphericalCap& b);

}  // namespace sixsplit::cp1
