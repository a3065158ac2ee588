#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sixsplit/cp1/sphere_point.hpp"

namespace sixsplit::certify {

enum class Sampler { Uniform, Clustered, NearDegenerate };

/// "uniform", "clustered", "near-degenerate"; throws std::invalid_argument otherwise.
Sampler parse_sampler(const std::string& name);
std::string sampler_name(Sampler s);

using SixPoints = std::array<cp1::SpherePoint, 6>;

/// Six distinct points drawn by the sampler from rng.
SixPoints sample_points(Sampler s, std::mt19937_64& rng);

struct FuzzFailure {
  std::uint64_t index;
  SixPoints points;
  std::string message;
  std::vector<std::string> transcript;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t fallback_uses = 0;
  double min_margin = 0.0;
  std::vector<FuzzFailure> failures;  // ordered by trial index
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::Uniform;
};

/// Trial i draws from mt19937_64(seed ^ i), splits, and re-verifies the
/// result. Trials run in parallel; the report does not depend on scheduling.
FuzzReport fuzz_campaign(std::uint64_t trials, std::uint64_t seed, Sampler sampler);

/// Single-threaded reference producing the identical report.
FuzzReport fuzz_campaign_serial(std::uint64_t trials, std::uint64_t seed, Sampler sampler);

}  // namespace sixsplit::certify
