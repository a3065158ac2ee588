#include "sixsplit/split/regions.hpp"

namespace sixsplit::split {

namespace {

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

}  // namespace

bool in_omega(Complex z) { return std::abs(z - 1.0) < 2.0 || std::abs(z + 1.0) < 2.0; }

bool in_sigma(Complex z, double tolerance) {
  return z.real() >= -tolerance && std::abs(z.imag()) <= 1.0 + tolerance;
}

GeneralizedDisc f_plus() { return GeneralizedDisc::disk({0.0, 1.0 / kSqrt3}, 2.0 / kSqrt3); }
GeneralizedDisc f_minus() { return GeneralizedDisc::disk({0.0, -1.0 / kSqrt3}, 2.0 / kSqrt3); }

MobiusMap s_map(int power) {
  const int k = ((power % 3) + 3) % 3;
  const Complex rot = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex shift = std::polar(1.0, std::numbers::pi / 3.0);
  MobiusMap m = MobiusMap::identity();
  for (int i = 0; i < k; ++i) m = MobiusMap::affine(rot, shift) * m;
  return m;
}

SpherePoint rotate_by_S(const SpherePoint& p, int power) { return cp1::mobius_apply(s_map(power), p); }

std::array<Complex, 3> triangle_t() {
  return {Complex(-1.0 - kSqrt3, -1.0), Complex(1.0 + kSqrt3, -1.0), Complex(0.0, 2.0 + kSqrt3)};
}

bool in_triangle_t(Complex z) {
  const auto v = triangle_t();
  // Counterclockwise vertices: strictly left of every edge.
  for (int i = 0; i < 3; ++i) {
    if (!(cross2(v[(i + 1) % 3] - v[i], z - v[i]) > 0.0)) return false;
  }
  return true;
}

bool in_t_cover(Complex z) {
  return std::abs(z + 1.0) < 2.0 || std::abs(z - 1.0) < 2.0 ||
         std::abs(z - Complex(0.0, kSqrt3)) < 2.0;
}

}  // namespace sixsplit::split
