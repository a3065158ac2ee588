#include "sixsplit/strip/arc.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sixsplit::strip {

double wrap_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_signed(double t) {
  double r = wrap_angle(t);
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

Arc Arc::make(double center, double half_width) {
  if (half_width >= std::numbers::pi) return whole();
  return {wrap_angle(center), half_width};
}

bool Arc::contains(double t) const {
  return is_whole() || std::abs(wrap_signed(t - center_angle)) <= half_width;
}

namespace {

using Interval = std::pair<double, double>;

// Union of the arcs as sorted, merged intervals inside [0, 2 pi].
std::vector<Interval> merged_union(const std::vector<Arc>& arcs) {
  std::vector<Interval> pieces;
  for (const Arc& a : arcs) {
    if (a.is_whole()) return {{0.0, kTwoPi}};
    const double s = a.start();
    const double e = s + 2.0 * a.half_width;
    if (e > kTwoPi) {
      pieces.emplace_back(s, kTwoPi);
      pieces.emplace_back(0.0, e - kTwoPi);
    } else {
      pieces.emplace_back(s, e);
    }
  }
  std::sort(pieces.begin(), pieces.end());
  std::vector<Interval> merged;
  for (const Interval& p : pieces) {
    if (!merged.empty() && p.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, p.second);
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

}  // namespace

std::vector<Arc> complement_of_arc_union(const std::vector<Arc>& arcs) {
  const std::vector<Interval> m = merged_union(arcs);
  if (m.empty()) return {Arc::whole()};
  std::vector<Arc> out;
  auto gap = [&out](double from, double to) {
    if (to > from) out.push_back(Arc::make(0.5 * (from + to), 0.5 * (to - from)));
  };
  // The wrap-around gap starts last, so emitting it last keeps the order.
  for (std::size_t i = 0; i + 1 < m.size(); ++i) gap(m[i].second, m[i + 1].first);
  gap(m.back().second, m.front().first + kTwoPi);
  return out;
}

double union_measure(const std::vector<Arc>& arcs) {
  double total = 0.0;
  for (const Interval& p : merged_union(arcs)) total += p.second - p.first;
  return total;
}

}  // namespace sixsplit::strip
