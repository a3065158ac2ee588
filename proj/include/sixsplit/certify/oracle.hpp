#pragma once

#include <cstdint>
#include <optional>

#include "sixsplit/certify/verify.hpp"

namespace sixsplit::certify {

struct OracleSplit {
  std::array<GeneralizedDisc, 3> discs;
  Pairing pairing;
  double margin;
};

/// All 15 ways to partition six indices into three pairs, in lexicographic order.
const std::array<Pairing, 15>& all_pairings();

/// Randomized local search over cap centers for every pairing, with radii
/// chosen optimally for the current centers. `budget` counts candidate
/// evaluations. Returns the first candidate that verify_split accepts.
/// Throws std::invalid_argument on coincident points.
std::optional<OracleSplit> oracle_search(const std::array<SpherePoint, 6>& points,
                                         std::uint64_t budget, std::uint64_t seed,
                                         double epsilon = kDefaultEpsilon);

}  // namespace sixsplit::certify
