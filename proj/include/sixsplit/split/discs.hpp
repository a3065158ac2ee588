#pragma once

#include "sixsplit/split/regions.hpp"

namespace sixsplit::split {

/// Closed disc with z and w as antipodal boundary points. Throws if z == w.
GeneralizedDisc diameter_disc(Complex z, Complex w);

/// Re((z3 - z1) conj(z3 - z2)); positive exactly when z3 lies outside F(z1, z2).
double exclusion_criterion(Complex z1, Complex z2, Complex z3);
bool outside_diameter_disc(Complex z1, Complex z2, Complex z3);

struct HullResult {
  bool member;
  /// min over t in [0, 1] of |p - c(t)| - r(t) for the interpolated discs
  /// c(t) = t c1 + (1 - t) c2, r(t) = t r1 + (1 - t) r2.
  double signed_distance;
  double t;
};

/// Membership of p in the convex hull of two bounded discs.
/// Throws std::invalid_argument unless both discs are bounded.
HullResult hull_membership(const GeneralizedDisc& f1, const GeneralizedDisc& f2, Complex p);

/// Half-plane through the midpoint of p and its nearest hull point, facing p.
/// Throws std::invalid_argument when p is in the hull.
GeneralizedDisc separating_halfplane(const GeneralizedDisc& f1, const GeneralizedDisc& f2,
                                     Complex p);

/// Bounded disc through-or-around p and q whose lowest point is at height
/// (floor + min(Im p, Im q)) / 2 or higher.
/// Throws std::invalid_argument when p == q or a point is not above floor.
GeneralizedDisc enclosed_disc_in_halfplane(Complex p, Complex q, double floor);

/// Member of the family c + t v + |v| sqrt(1 + t^2) D with c = (z1 + z2)/2 and
/// v = i (z2 - z1)/2; every member has z1 and z2 on its boundary.
GeneralizedDisc lifted_family(Complex z1, Complex z2, double t);

/// Parameter chosen by lifted_disc.
double lifted_parameter(Complex z1, Complex z2);

/// Disc through z1 (on Im = 1) and z2 (|Im| <= 1) that avoids the unit disc
/// and stays in Im >= -1. Throws std::invalid_argument on violated preconditions.
GeneralizedDisc lifted_disc(Complex z1, Complex z2);

/// The one of f_plus / f_minus disjoint from F(z1, z2), preferring the larger
/// separation. Throws std::invalid_argument when the hypotheses fail and
/// std::runtime_error when neither disc is disjoint.
GeneralizedDisc fallback_fpm(Complex z1, Complex z2);

/// |z3| >= sqrt5 and z3 at distance >= 2 from z1 and z2.
bool covering_check(Complex z1, Complex z2, Complex z3);

}  // namespace sixsplit::split
