#pragma once

#include <numbers>
#include <vector>

namespace sixsplit::strip {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angle reduced to [0, 2 pi).
double wrap_angle(double t);
/// Angle reduced to (-pi, pi].
double wrap_signed(double t);

/// Closed arc of the unit circle { e^{it} : |t - center_angle| <= half_width (mod 2 pi) }.
/// A half-width of pi or more is the whole circle.
struct Arc {
  double center_angle = 0.0;  // in [0, 2 pi)
  double half_width = 0.0;    // in (0, pi]

  static Arc whole() { return {0.0, std::numbers::pi}; }
  static Arc make(double center, double half_width);

  bool is_whole() const { return half_width >= std::numbers::pi; }
  double start() const { return wrap_angle(center_angle - half_width); }
  double measure() const { return is_whole() ? kTwoPi : 2.0 * half_width; }
  bool contains(double t) const;
};

/// Maximal arcs of the complement of the union, sorted by start angle.
/// Empty when the arcs cover the circle; the whole circle when `arcs` is empty.
std::vector<Arc> complement_of_arc_union(const std::vector<Arc>& arcs);

/// Total measure of the union.
double union_measure(const std::vector<Arc>& arcs);

}  // namespace sixsplit::strip
