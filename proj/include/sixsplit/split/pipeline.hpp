#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixsplit/certify/verify.hpp"
#include "sixsplit/split/distinguished.hpp"
#include "sixsplit/split/regions.hpp"
#include "sixsplit/strip/strip.hpp"

namespace sixsplit::split {

using certify::Pairing;

struct SplitOptions {
  double epsilon = certify::kDefaultEpsilon;
  /// Rotated, conjugated and alternate-normalization retries.
  bool retries = true;
  /// Randomized search as the last resort.
  bool oracle = true;
  std::uint64_t oracle_budget = 200000;
  std::uint64_t oracle_seed = 0x5eed;
};

/// Three pairwise-disjoint discs, each strictly containing the two points of
/// its pair and no other input point.
struct CertifiedSplit {
  /// Certified discs: the constructed centers with radii re-balanced to
  /// maximize the verifier margin.
  std::array<GeneralizedDisc, 3> discs;
  /// The closed discs as constructed, before re-balancing; points may lie on
  /// their boundaries.
  std::array<GeneralizedDisc, 3> construction;
  Pairing pairing;
  double margin = 0.0;
  std::vector<std::string> transcript;
  bool used_oracle = false;
};

/// Every constructive branch and fallback failed to certify.
class ExhaustedError : public std::runtime_error {
 public:
  ExhaustedError(const std::string& what, std::vector<std::string> transcript)
      : std::runtime_error(what), transcript_(std::move(transcript)) {}
  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  std::vector<std::string> transcript_;
};

/// Frame of a split: slot 0 -> -1, slot 1 -> 1, slot 2 -> infinity, slots 3..5 -> E.
struct Normalization {
  MobiusMap map;
  std::array<int, 6> slot_to_input;
  DistinguishedTriple e;
};

/// Sends the input point at infinity (or, without one, the most isolated
/// point) to infinity and the closest remaining pair to -1 and 1.
/// Throws std::invalid_argument on duplicates or when the image violates
/// the distinguished invariants.
Normalization normalize_six(const std::array<SpherePoint, 6>& points);

/// Certified split of E u {-1, 1, infinity}, with points ordered by slot.
CertifiedSplit split_by_strip(const DistinguishedTriple& e, const strip::StripWitness& w,
                              const SplitOptions& options = {});
CertifiedSplit split_distinguished(const DistinguishedTriple& e, const SplitOptions& options = {});

/// Certified split of six distinct points, pairing indices into `points`.
/// Throws std::invalid_argument on duplicates and ExhaustedError if nothing certifies.
CertifiedSplit split_six(const std::array<SpherePoint, 6>& points, const SplitOptions& options = {});

/// Points of the normalized frame in slot order.
std::array<SpherePoint, 6> frame_points(const DistinguishedTriple& e);

}  // namespace sixsplit::split
