#pragma once

namespace sixsplit::split {

/// Angle q(r) in [0, pi] with cos q = (r^2 - 3) / (2r); for r in [sqrt3, 3] a point
/// of modulus r outside the excluded region has argument in [q(r), pi - q(r)].
double q_angle(double r);

/// Lower bound on Re over the rotated diameter disc, r = |z1| in [sqrt3, sqrt5].
double phi(double r);

/// Upper bound on Re over the rotated lower fallback disc.
double psi(double r);

/// Two-parameter bound whose minimum over |delta| <= 1 is phi(r).
double h_tilde(double r, double delta);

/// Total angular measure bound for three forbidden arc pairs: 4 asin(1/sqrt3) + 8 asin(1/sqrt5).
double arc_measure_bound();

/// sqrt2 (sqrt(sqrt2 + sqrt6 - 1) - 1).
double hull_radical();

/// 2 sqrt(1 - (sqrt3 - sqrt2 + sqrt2 sqrt(sqrt6 + sqrt2 - 1)) / (sqrt2 (sqrt2 + 1))).
double hull_companion_radical();

}  // namespace sixsplit::split
