#pragma once

#include <array>
#include <numbers>

#include "sixsplit/cp1/disc.hpp"

namespace sixsplit::split {

using cp1::Complex;
using cp1::GeneralizedDisc;
using cp1::MobiusMap;
using cp1::SpherePoint;

inline constexpr double kSqrt3 = std::numbers::sqrt3;
inline const double kSqrt5 = std::sqrt(5.0);

/// Union of the open radius-2 discs about -1 and 1.
bool in_omega(Complex z);

/// Half-strip { Re >= 0, |Im| <= 1 }.
bool in_sigma(Complex z, double tolerance = 0.0);

/// Closed discs of radius 2/sqrt 3 about +-i/sqrt 3; each passes through -1, 1
/// and one of +-sqrt(3) i.
GeneralizedDisc f_plus();
GeneralizedDisc f_minus();

/// S(x) = e^{2 pi i/3} x + e^{pi i/3}: rotation by 2 pi/3 about i/sqrt 3,
/// cycling -1 -> 1 -> sqrt(3) i -> -1.
MobiusMap s_map(int power = 1);
SpherePoint rotate_by_S(const SpherePoint& p, int power);

/// Vertices of the open triangle T: -1 - sqrt3 - i, 1 + sqrt3 - i, (2 + sqrt3) i.
std::array<Complex, 3> triangle_t();
bool in_triangle_t(Complex z);

/// Membership in (-1 + 2D) u (1 + 2D) u (sqrt(3) i + 2D), open discs.
bool in_t_cover(Complex z);

}  // namespace sixsplit::split
