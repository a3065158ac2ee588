#include "sixsplit/split/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace sixsplit::split {

double q_angle(double r) { return std::acos(std::clamp((r * r - 3.0) / (2.0 * r), -1.0, 1.0)); }

double phi(double r) {
  const double a = r * r - 1.0;
  const double b = 9.0 - r * r;
  return 0.5 * (std::sqrt(a) + std::sqrt(b) - std::sqrt(12.0 - 2.0 * std::sqrt(a * b)));
}

double psi(double r) {
  const double r2 = r * r;
  return (5.0 * r2 - 3.0 - (r2 - 1.0) * std::sqrt(9.0 - r2)) / (2.0 * r2 * std::sqrt(3.0));
}

double h_tilde(double r, double delta) {
  const double d2 = delta * delta;
  const double a = r * r - d2;
  const double b = 10.0 - r * r - d2;
  return 0.5 * (std::sqrt(a) + std::sqrt(b) - std::sqrt(10.0 + 2.0 * d2 - 2.0 * std::sqrt(a * b)));
}

double arc_measure_bound() {
  return 4.0 * std::asin(1.0 / std::sqrt(3.0)) + 8.0 * std::asin(1.0 / std::sqrt(5.0));
}

double hull_radical() {
  return std::sqrt(2.0) * (std::sqrt(std::sqrt(2.0) + std::sqrt(6.0) - 1.0) - 1.0);
}

double hull_companion_radical() {
  const double s2 = std::sqrt(2.0);
  const double inner =
      (std::sqrt(3.0) - s2 + s2 * std::sqrt(std::sqrt(6.0) + s2 - 1.0)) / (s2 * (s2 + 1.0));
  return 2.0 * std::sqrt(1.0 - inner);
}

}  // namespace sixsplit::split
