#pragma once

#include <boost/math/tools/minima.hpp>
#include <cstdint>
#include <limits>
#include <utility>

namespace sixsplit::detail {

/// Minimum of a unimodal function on [lo, hi] as (argument, value). Brent's
/// method locates interior minima; both endpoints are compared explicitly so
/// boundary minima are exact.
template <class F>
std::pair<double, double> minimize_unimodal(F f, double lo, double hi) {
  std::uintmax_t iterations = 200;
  std::pair<double, double> best = boost::math::tools::brent_find_minima(
      f, lo, hi, std::numeric_limits<double>::digits, iterations);
  for (const double x : {lo, hi}) {
    const double v = f(x);
    if (v < best.second) best = {x, v};
  }
  return best;
}

}  // namespace sixsplit::detail
