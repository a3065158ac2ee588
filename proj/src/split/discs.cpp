#include "sixsplit/split/discs.hpp"

#include <stdexcept>

#include "sixsplit/strip/strip.hpp"

namespace sixsplit::split {

namespace {

constexpr double kPreTolerance = 1e-9;

}  // namespace

GeneralizedDisc diameter_disc(Complex z, Complex w) {
  if (z == w) throw std::invalid_argument("diameter_disc: coincident points");
  return GeneralizedDisc::disk(0.5 * (z + w), 0.5 * std::abs(z - w));
}

double exclusion_criterion(Complex z1, Complex z2, Complex z3) {
  return ((z3 - z1) * std::conj(z3 - z2)).real();
}

bool outside_diameter_disc(Complex z1, Complex z2, Complex z3) {
  return exclusion_criterion(z1, z2, z3) > 0.0;
}

HullResult hull_membership(const GeneralizedDisc& f1, const GeneralizedDisc& f2, Complex p) {
  if (!f1.is_bounded() || !f2.is_bounded()) {
    throw std::invalid_argument("hull_membership: discs must be bounded");
  }
  const Complex c1 = f1.center();
  const Complex c2 = f2.center();
  const double r1 = f1.radius();
  const double r2 = f2.radius();
  // Convex in t: a norm of an affine function minus an affine function.
  auto g = [&](double t) { return std::abs(p - (t * c1 + (1.0 - t) * c2)) - (t * r1 + (1.0 - t) * r2); };
  double best_t = g(0.0) <= g(1.0) ? 0.0 : 1.0;
  double best = g(best_t);
  const double len = std::abs(c1 - c2);
  const double kappa = len > 0.0 ? (r2 - r1) / len : 2.0;
  if (std::abs(kappa) < 1.0) {
    // Stationary point: p - c(t) makes angle acos(kappa) with u = (c1 - c2) / len,
    // i.e. its component along u equals kappa |b| / sqrt(1 - kappa^2).
    const Complex u = (c1 - c2) / len;
    const Complex w = (p - c2) * std::conj(u);
    const double t = (w.real() - kappa * std::abs(w.imag()) / std::sqrt(1.0 - kappa * kappa)) / len;
    if (t > 0.0 && t < 1.0 && g(t) < best) {
      best_t = t;
      best = g(t);
    }
  }
  return {best <= 0.0, best, best_t};
}

GeneralizedDisc separating_halfplane(const GeneralizedDisc& f1, const GeneralizedDisc& f2,
                                     Complex p) {
  const HullResult h = hull_membership(f1, f2, p);
  if (!(h.signed_distance > 0.0)) {
    throw std::invalid_argument("separating_halfplane: point lies in the hull");
  }
  const Complex c = h.t * f1.center() + (1.0 - h.t) * f2.center();
  const double r = h.t * f1.radius() + (1.0 - h.t) * f2.radius();
  const Complex near = c + r * (p - c) / std::abs(p - c);
  const Complex normal = (p - near) / std::abs(p - near);
  const Complex mid = 0.5 * (p + near);
  return GeneralizedDisc::half_plane(normal, (std::conj(normal) * mid).real());
}

GeneralizedDisc enclosed_disc_in_halfplane(Complex p, Complex q, double floor) {
  if (p == q) throw std::invalid_argument("enclosed_disc_in_halfplane: coincident points");
  if (!(p.imag() > floor) || !(q.imag() > floor)) {
    throw std::invalid_argument("enclosed_disc_in_halfplane: points must lie above the floor");
  }
  const double target = 0.5 * (floor + std::min(p.imag(), q.imag()));
  const Complex m = 0.5 * (p + q);
  const double d = 0.5 * std::abs(q - p);
  if (m.imag() - d >= target) return GeneralizedDisc::disk(m, d);

  // Center m + s n on the bisector with bottom Im(m) + s k - sqrt(d^2 + s^2) = target.
  Complex n = Complex(0.0, 1.0) * (q - p) / (2.0 * d);
  if (n.imag() < 0.0) n = -n;
  const double k = n.imag();
  const double h = m.imag() - target;
  // Smaller root of s^2 (1 - k^2) - 2 h k s + d^2 - h^2 = 0, in cancellation-free form.
  const double disc = std::max(0.0, h * h * k * k - (1.0 - k * k) * (d * d - h * h));
  const double s = (d * d - h * h) / (h * k + std::sqrt(disc));
  return GeneralizedDisc::disk(m + s * n, std::sqrt(d * d + s * s));
}

GeneralizedDisc lifted_family(Complex z1, Complex z2, double t) {
  const Complex c = 0.5 * (z1 + z2);
  const Complex v = Complex(0.0, 0.5) * (z2 - z1);
  return GeneralizedDisc::disk(c + t * v, std::abs(v) * std::sqrt(1.0 + t * t));
}

double lifted_parameter(Complex z1, Complex z2) {
  const Complex c = 0.5 * (z1 + z2);
  const Complex v = Complex(0.0, 0.5) * (z2 - z1);
  // Lowest point of the family member: Im c + t Im v - |v| sqrt(1 + t^2).
  if (v.real() > 0.0) return v.imag() / v.real();
  // Horizontal chord: the lowest point rises toward Im c as t grows; take the
  // first t with sqrt(1 + t^2) - t <= k.
  const double k = (c.imag() + 1.0) / std::abs(v);
  if (k >= 1.0) return 0.0;
  return (1.0 - k * k) / (2.0 * k);
}

GeneralizedDisc lifted_disc(Complex z1, Complex z2) {
  if (!(z1.real() >= 1.0 - kPreTolerance) || !(z1.real() < z2.real()) ||
      std::abs(z1.imag() - 1.0) > kPreTolerance || std::abs(z2.imag()) > 1.0 + kPreTolerance) {
    throw std::invalid_argument("lifted_disc: points outside the admissible configuration");
  }
  if (!cp1::discs_disjoint(diameter_disc(z1, z2), GeneralizedDisc::unit_disk()).disjoint) {
    throw std::invalid_argument("lifted_disc: diameter disc meets the unit disc");
  }
  return lifted_family(z1, z2, lifted_parameter(z1, z2));
}

GeneralizedDisc fallback_fpm(Complex z1, Complex z2) {
  const GeneralizedDisc f = diameter_disc(z1, z2);
  const double slack = distinguished_slack(z1, z2);
  if (std::abs(f.center()) > 1.0 + f.radius()) {
    throw std::invalid_argument("fallback_fpm: diameter disc does not meet the unit disc");
  }
  if (std::abs(z1 - z2) < 2.0 - slack || !strip::approximately_collinear(z1, z2).collinear) {
    throw std::invalid_argument("fallback_fpm: points are not an admissible pair");
  }
  for (const Complex z : {z1, z2}) {
    if (std::min(std::abs(z - 1.0), std::abs(z + 1.0)) < 2.0 - slack) {
      throw std::invalid_argument("fallback_fpm: point inside the excluded region");
    }
  }
  const auto plus = cp1::discs_disjoint(f, f_plus());
  const auto minus = cp1::discs_disjoint(f, f_minus());
  if (!plus.disjoint && !minus.disjoint) {
    throw std::runtime_error("fallback_fpm: both fallback discs meet the diameter disc");
  }
  if (plus.disjoint && (!minus.disjoint || plus.separation >= minus.separation)) return f_plus();
  return f_minus();
}

bool covering_check(Complex z1, Complex z2, Complex z3) {
  return std::abs(z3) >= kSqrt5 && std::abs(z3 - z1) >= 2.0 && std::abs(z3 - z2) >= 2.0;
}

}  // namespace sixsplit::split
