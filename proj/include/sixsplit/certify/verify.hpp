#pragma once

#include <array>
#include <string>
#include <vector>

#include "sixsplit/cp1/disc.hpp"

namespace sixsplit::certify {

using cp1::GeneralizedDisc;
using cp1::SpherePoint;

/// pairing[j] lists the two point indices that disc j must contain.
using Pairing = std::array<std::array<int, 2>, 3>;

inline constexpr double kDefaultEpsilon = 1e-9;

struct DiscReport {
  cp1::SphericalCap cap;
  std::array<int, 2> members;
  /// Angle from the cap center to each point minus the cap radius (negative inside).
  std::array<double, 6> slack;
};

struct Certificate {
  std::array<DiscReport, 3> discs;
  /// Cap separations for the disc pairs (0,1), (0,2), (1,2).
  std::array<double, 3> separations;
  /// Smallest of the member depths, the nonmember clearances and the separations.
  double margin;
  double epsilon;
  bool pass;
  std::vector<std::string> violations;
};

/// Checks the split in the sphere model: every disc strictly contains its two
/// points and no other, the discs are pairwise disjoint, and the smallest of
/// all these angular slacks exceeds epsilon.
Certificate verify_split(const std::array<SpherePoint, 6>& points,
                         const std::array<GeneralizedDisc, 3>& discs, const Pairing& pairing,
                         double epsilon = kDefaultEpsilon);

/// True when the pairing uses each index 0..5 exactly once.
bool is_partition(const Pairing& pairing);

}  // namespace sixsplit::certify
