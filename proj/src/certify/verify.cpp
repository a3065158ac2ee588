#include "sixsplit/certify/verify.hpp"

#include <algorithm>
#include <limits>

namespace sixsplit::certify {

bool is_partition(const Pairing& pairing) {
  std::array<int, 6> seen{};
  for (const auto& pair : pairing) {
    for (const int i : pair) {
      if (i < 0 || i > 5 || seen[i]++) return false;
    }
  }
  return true;
}

Certificate verify_split(const std::array<SpherePoint, 6>& points,
                         const std::array<GeneralizedDisc, 3>& discs, const Pairing& pairing,
                         double epsilon) {
  Certificate cert{};
  cert.epsilon = epsilon;
  cert.margin = std::numeric_limits<double>::infinity();

  if (!is_partition(pairing)) {
    cert.violations.push_back("pairing is not a partition of the six indices");
  }

  std::array<cp1::Vec3, 6> unit{};
  for (int i = 0; i < 6; ++i) unit[i] = points[i].to_sphere();

  for (int j = 0; j < 3; ++j) {
    DiscReport& r = cert.discs[j];
    r.cap = cp1::disc_to_cap(discs[j]);
    r.members = pairing[j];
    for (int i = 0; i < 6; ++i) {
      r.slack[i] = cp1::angle_between(r.cap.center, unit[i]) - r.cap.angular_radius;
      const bool member = i == pairing[j][0] || i == pairing[j][1];
      const double m = member ? -r.slack[i] : r.slack[i];
      cert.margin = std::min(cert.margin, m);
      if (!(m > 0.0)) {
        cert.violations.push_back("disc " + std::to_string(j) +
                                  (member ? " does not strictly contain point "
                                          : " contains point ") +
                                  std::to_string(i));
      }
    }
  }

  int k = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b, ++k) {
      const auto& ca = cert.discs[a].cap;
      const auto& cb = cert.discs[b].cap;
      cert.separations[k] =
          cp1::angle_between(ca.center, cb.center) - ca.angular_radius - cb.angular_radius;
      cert.margin = std::min(cert.margin, cert.separations[k]);
      if (!(cert.separations[k] > 0.0)) {
        cert.violations.push_back("discs " + std::to_string(a) + " and " + std::to_string(b) +
                                  " intersect");
      }
    }
  }

  if (!(cert.margin > epsilon) && cert.violations.empty()) {
    cert.violations.push_back("margin below epsilon");
  }
  cert.pass = cert.violations.empty() && cert.margin > epsilon;
  return cert;
}

}  // namespace sixsplit::certify
