#include "sixsplit/certify/fuzz.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "sixsplit/certify/verify.hpp"
#include "sixsplit/split/pipeline.hpp"

namespace sixsplit::certify {

namespace {

using cp1::Complex;
using cp1::SpherePoint;
using cp1::Vec3;

Vec3 gaussian_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    const Vec3 v{g(rng), g(rng), g(rng)};
    if (cp1::norm(v) > 1e-9) return v;
  }
}

bool distinct(const SixPoints& p) {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (cp1::chordal_distance(p[i], p[j]) < 1e-14) return false;
    }
  }
  return true;
}

SixPoints uniform_points(std::mt19937_64& rng) {
  SixPoints p{SpherePoint::infinity(), SpherePoint::infinity(), SpherePoint::infinity(),
              SpherePoint::infinity(), SpherePoint::infinity(), SpherePoint::infinity()};
  for (auto& q : p) q = SpherePoint::from_sphere(gaussian_vector(rng));
  return p;
}

SixPoints clustered_points(std::mt19937_64& rng) {
  static constexpr std::array<double, 3> kSigma{1e-1, 1e-2, 1e-3};
  const int clusters = std::uniform_int_distribution<int>(2, 3)(rng);
  const double sigma = kSigma[std::uniform_int_distribution<int>(0, 2)(rng)];
  std::array<Vec3, 3> centers{};
  for (int k = 0; k < clusters; ++k) centers[k] = cp1::normalized(gaussian_vector(rng));
  std::normal_distribution<double> g(0.0, sigma);
  SixPoints p = uniform_points(rng);
  for (int i = 0; i < 6; ++i) {
    // The first points seed every cluster; the rest pick one at random.
    const int k = i < clusters ? i : std::uniform_int_distribution<int>(0, clusters - 1)(rng);
    const Vec3 c = centers[k];
    p[i] = SpherePoint::from_sphere({c[0] + g(rng), c[1] + g(rng), c[2] + g(rng)});
  }
  return p;
}

// Normalized frame {-1, 1, inf} u E with E at the edge of the admissible region.
std::array<Complex, 3> near_degenerate_triple(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> mode(0, 2);
  const Complex root3(0.0, std::numbers::sqrt3);
  constexpr double kViolation = 1e-8;
  for (;;) {
    std::array<Complex, 3> e{};
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) {
      Complex z;
      switch (mode(rng)) {
        case 0:
          z = (unit(rng) < 0.5 ? root3 : -root3) + 1e-6 * unit(rng) * std::polar(1.0, angle(rng));
          break;
        case 1: {
          const int anchor = std::uniform_int_distribution<int>(0, j + 1)(rng);
          const Complex base = anchor < 2 ? Complex(anchor == 0 ? -1.0 : 1.0, 0.0) : e[anchor - 2];
          z = base + (2.0 + 1e-9 * (2.0 * unit(rng) - 1.0)) * std::polar(1.0, angle(rng));
          break;
        }
        default:
          z = 6.0 * std::sqrt(unit(rng)) * std::polar(1.0, angle(rng));
      }
      ok = std::abs(z) <= 6.0 && std::abs(z - 1.0) >= 2.0 - kViolation &&
           std::abs(z + 1.0) >= 2.0 - kViolation;
      for (int k = 0; k < j && ok; ++k) ok = std::abs(z - e[k]) >= 2.0 - kViolation;
      e[j] = z;
    }
    if (ok) return e;
  }
}

std::optional<cp1::MobiusMap> random_mobius(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const Complex a(g(rng), g(rng)), b(g(rng), g(rng)), c(g(rng), g(rng)), d(g(rng), g(rng));
  if (std::abs(a * d - b * c) < 1e-3) return std::nullopt;
  return cp1::MobiusMap(a, b, c, d);
}

SixPoints near_degenerate_points(std::mt19937_64& rng) {
  const auto e = near_degenerate_triple(rng);
  SixPoints p{SpherePoint::finite(-1.0, 0.0), SpherePoint::finite(1.0, 0.0),
              SpherePoint::infinity(),        SpherePoint::finite(e[0]),
              SpherePoint::finite(e[1]),      SpherePoint::finite(e[2])};
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    std::optional<cp1::MobiusMap> m;
    while (!(m = random_mobius(rng))) {
    }
    for (auto& q : p) q = (*m)(q);
  }
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

struct TrialOutcome {
  bool success = false;
  bool oracle = false;
  double margin = 0.0;
  std::optional<FuzzFailure> failure;
};

TrialOutcome run_trial(std::uint64_t index, std::uint64_t seed, Sampler sampler) {
  std::mt19937_64 rng(seed ^ index);
  const SixPoints points = sample_points(sampler, rng);
  TrialOutcome out;
  try {
    const split::CertifiedSplit s = split::split_six(points);
    const Certificate cert = verify_split(points, s.discs, s.pairing);
    if (cert.pass && cert.margin > 0.0) {
      out.success = true;
      out.oracle = s.used_oracle;
      out.margin = cert.margin;
    } else {
      out.failure = FuzzFailure{index, points, "re-verification failed", s.transcript};
    }
  } catch (const split::ExhaustedError& ex) {
    out.failure = FuzzFailure{index, points, ex.what(), ex.transcript()};
  } catch (const std::exception& ex) {
    out.failure = FuzzFailure{index, points, ex.what(), {}};
  }
  return out;
}

FuzzReport reduce(std::vector<TrialOutcome>& outcomes, std::uint64_t seed, Sampler sampler) {
  FuzzReport r;
  r.trials = outcomes.size();
  r.seed = seed;
  r.sampler = sampler;
  double min_margin = std::numeric_limits<double>::infinity();
  for (auto& o : outcomes) {
    if (o.success) {
      ++r.successes;
      r.fallback_uses += o.oracle;
      min_margin = std::min(min_margin, o.margin);
    } else {
      r.failures.push_back(std::move(*o.failure));
    }
  }
  r.min_margin = r.successes > 0 ? min_margin : 0.0;
  return r;
}

}  // namespace

Sampler parse_sampler(const std::string& name) {
  if (name == "uniform") return Sampler::Uniform;
  if (name == "clustered") return Sampler::Clustered;
  if (name == "near-degenerate") return Sampler::NearDegenerate;
  throw std::invalid_argument("unknown sampler: " + name);
}

std::string sampler_name(Sampler s) {
  switch (s) {
    case Sampler::Uniform:
      return "uniform";
    case Sampler::Clustered:
      return "clustered";
    case Sampler::NearDegenerate:
      return "near-degenerate";
  }
  return "uniform";
}

SixPoints sample_points(Sampler s, std::mt19937_64& rng) {
  for (;;) {
    SixPoints p = s == Sampler::Uniform     ? uniform_points(rng)
                  : s == Sampler::Clustered ? clustered_points(rng)
                                            : near_degenerate_points(rng);
    if (distinct(p)) return p;
  }
}

FuzzReport fuzz_campaign(std::uint64_t trials, std::uint64_t seed, Sampler sampler) {
  std::vector<TrialOutcome> outcomes(trials);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[i] = run_trial(static_cast<std::uint64_t>(i), seed, sampler);
  }
  return reduce(outcomes, seed, sampler);
}

FuzzReport fuzz_campaign_serial(std::uint64_t trials, std::uint64_t seed, Sampler sampler) {
  std::vector<TrialOutcome> outcomes(trials);
  for (std::uint64_t i = 0; i < trials; ++i) outcomes[i] = run_trial(i, seed, sampler);
  return reduce(outcomes, seed, sampler);
}

}  // namespace sixsplit::certify
