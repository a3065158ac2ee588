#include "sixsplit/certify/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sixsplit::certify {

namespace {

using cp1::Vec3;

std::array<Pairing, 15> make_pairings() {
  std::array<Pairing, 15> out{};
  int n = 0;
  for (int b = 1; b < 6; ++b) {
    std::array<int, 4> rest{};
    int k = 0;
    for (int i = 1; i < 6; ++i) {
      if (i != b) rest[k++] = i;
    }
    // rest[0] pairs with one of the three later indices.
    for (int c = 1; c < 4; ++c) {
      std::array<int, 2> last{};
      int m = 0;
      for (int i = 1; i < 4; ++i) {
        if (i != c) last[m++] = rest[i];
      }
      out[n++] = Pairing{{{0, b}, {rest[0], rest[c]}, {last[0], last[1]}}};
    }
  }
  return out;
}

Vec3 any_perpendicular(const Vec3& u) {
  const Vec3 axis = std::abs(u[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  return cp1::normalized(cp1::cross(u, axis));
}

// Smallest cap through both points.
Vec3 enclosing_center(const Vec3& u, const Vec3& v) {
  const Vec3 s{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
  if (cp1::norm(s) < 1e-12) return any_perpendicular(u);
  return cp1::normalized(s);
}

struct Candidate {
  std::array<Vec3, 3> centers;
  std::array<double, 3> radii;
  double score;
};

// Radii maximizing the smallest slack for fixed centers.
Candidate best_radii(const std::array<Vec3, 6>& pts, const Pairing& pairing,
                     const std::array<Vec3, 3>& centers) {
  std::array<double, 3> inner{};
  std::array<double, 3> outer{};
  for (int j = 0; j < 3; ++j) {
    inner[j] = 0.0;
    outer[j] = std::numbers::pi;
    for (int i = 0; i < 6; ++i) {
      const double d = cp1::angle_between(centers[j], pts[i]);
      if (i == pairing[j][0] || i == pairing[j][1]) {
        inner[j] = std::max(inner[j], d);
      } else {
        outer[j] = std::min(outer[j], d);
      }
    }
  }
  double t = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 3; ++j) t = std::min(t, 0.5 * (outer[j] - inner[j]));
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const double s = cp1::angle_between(centers[a], centers[b]);
      t = std::min(t, (s - inner[a] - inner[b]) / 3.0);
    }
  }
  Candidate c{centers, {}, t};
  for (int j = 0; j < 3; ++j) {
    c.radii[j] = std::clamp(inner[j] + t, 1e-15, std::numbers::pi - 1e-15);
  }
  return c;
}

std::optional<OracleSplit> certified(const std::array<SpherePoint, 6>& points,
                                     const Pairing& pairing, const Candidate& c,
                                     double epsilon) {
  if (!(c.score > epsilon)) return std::nullopt;
  std::array<GeneralizedDisc, 3> discs{cp1::cap_to_disc({c.centers[0], c.radii[0]}),
                                       cp1::cap_to_disc({c.centers[1], c.radii[1]}),
                                       cp1::cap_to_disc({c.centers[2], c.radii[2]})};
  const Certificate cert = verify_split(points, discs, pairing, epsilon);
  if (!cert.pass) return std::nullopt;
  return OracleSplit{discs, pairing, cert.margin};
}

}  // namespace

const std::array<Pairing, 15>& all_pairings() {
  static const std::array<Pairing, 15> pairings = make_pairings();
  return pairings;
}

std::optional<OracleSplit> oracle_search(const std::array<SpherePoint, 6>& points,
                                         std::uint64_t budget, std::uint64_t seed,
                                         double epsilon) {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (points[i] == points[j]) throw std::invalid_argument("oracle_search: duplicate points");
    }
  }
  std::array<Vec3, 6> pts{};
  for (int i = 0; i < 6; ++i) pts[i] = points[i].to_sphere();

  const auto& pairings = all_pairings();
  std::array<Candidate, 15> current{};
  std::uint64_t used = 0;
  for (int p = 0; p < 15 && used < budget; ++p, ++used) {
    std::array<Vec3, 3> centers{};
    for (int j = 0; j < 3; ++j) {
      centers[j] = enclosing_center(pts[pairings[p][j][0]], pts[pairings[p][j][1]]);
    }
    current[p] = best_radii(pts, pairings[p], centers);
    if (auto hit = certified(points, pairings[p], current[p], epsilon)) return hit;
  }
  if (used < 15) return std::nullopt;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, 15> step{};
  step.fill(0.3);
  // Round-robin restarts keep every pairing alive; the step shrinks on failure.
  while (used < budget) {
    for (int p = 0; p < 15 && used < budget; ++p, ++used) {
      Candidate& cur = current[p];
      std::array<Vec3, 3> centers = cur.centers;
      for (Vec3& c : centers) {
        for (double& x : c) x += step[p] * gauss(rng);
        c = cp1::normalized(c);
      }
      const Candidate next = best_radii(pts, pairings[p], centers);
      if (next.score > cur.score) {
        cur = next;
        step[p] = std::min(0.5, step[p] * 1.5);
        if (auto hit = certified(points, pairings[p], cur, epsilon)) return hit;
      } else {
        step[p] = std::max(1e-6, step[p] * 0.9);
      }
    }
  }
  return std::nullopt;
}

}  // namespace sixsplit::certify
