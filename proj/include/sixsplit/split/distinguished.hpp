#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace sixsplit::split {

using Complex = std::complex<double>;

/// Relative slack used when asserting the distance invariants.
inline double distinguished_slack(Complex z, Complex w) {
  return 1e-12 * (1.0 + std::abs(z) + std::abs(w));
}

/// Three finite points, pairwise at distance >= 2 and each at distance >= 2
/// from both -1 and 1 (so outside the two open radius-2 discs about +-1).
class DistinguishedTriple {
 public:
  /// Throws std::invalid_argument naming the violated invariant.
  static DistinguishedTriple make(const std::array<Complex, 3>& e) {
    for (int i = 0; i < 3; ++i) {
      const Complex z = e[i];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("distinguished triple: non-finite point");
      }
      for (const double s : {-1.0, 1.0}) {
        if (std::abs(z - s) < 2.0 - distinguished_slack(z, s)) {
          throw std::invalid_argument("distinguished triple: point " + std::to_string(i) +
                                      " lies inside the excluded region");
        }
      }
      for (int j = i + 1; j < 3; ++j) {
        if (std::abs(z - e[j]) < 2.0 - distinguished_slack(z, e[j])) {
          throw std::invalid_argument("distinguished triple: points " + std::to_string(i) +
                                      " and " + std::to_string(j) + " closer than 2");
        }
      }
    }
    return DistinguishedTriple(e);
  }

  /// Skips the invariant checks; used for rotated retries where they may fail.
  static DistinguishedTriple unchecked(const std::array<Complex, 3>& e) {
    return DistinguishedTriple(e);
  }

  const std::array<Complex, 3>& points() const { return e_; }
  Complex operator[](int i) const { return e_[i]; }

 private:
  explicit DistinguishedTriple(const std::array<Complex, 3>& e) : e_(e) {}

  std::array<Complex, 3> e_;
};

}  // namespace sixsplit::split
