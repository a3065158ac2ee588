#include "sixsplit/strip/strip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sixsplit/detail/minimize.hpp"

namespace sixsplit::strip {

namespace {

constexpr double kPi = std::numbers::pi;

Complex unit(double t) { return std::polar(1.0, t); }

struct Window {
  double lo;
  double hi;
  bool empty() const { return lo > hi; }
};

// Directions t0 + u, u in [-alpha, alpha], for which |Im(q e^{-it})| <= 1 and
// Re(q e^{-it}) >= 0; a single interval when both moduli are at least sqrt 3.
Window rotated_window(Complex q, double t0, double alpha) {
  const double r = std::abs(q);
  const double beta = r > 1.0 ? std::asin(1.0 / r) : kPi / 2.0;
  const double delta = wrap_signed(std::arg(q) - t0);
  return {std::max(-alpha, delta - beta), std::min(alpha, delta + beta)};
}

}  // namespace

std::vector<Arc> forbidden_arcs(Complex z) {
  const double r = std::abs(z);
  if (r <= 1.0) return {Arc::whole()};
  const double t0 = std::arg(z);
  const double alpha = std::asin(1.0 / r);
  return {Arc::make(t0, alpha), Arc::make(t0 + kPi, alpha)};
}

Arc sigma_arc(Complex z) {
  const double r = std::abs(z);
  if (r == 0.0) return Arc::whole();
  return Arc::make(std::arg(z), r > 1.0 ? std::asin(1.0 / r) : kPi / 2.0);
}

double strip_margin(const std::array<Complex, 3>& e, Complex a) {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex z : e) m = std::min(m, std::abs((z / a).imag()) - 1.0);
  return m;
}

std::optional<StripWitness> find_strip_witness(const std::array<Complex, 3>& e) {
  std::vector<Arc> arcs;
  for (const Complex z : e) {
    const auto f = forbidden_arcs(z);
    arcs.insert(arcs.end(), f.begin(), f.end());
  }
  std::optional<StripWitness> best;
  for (const Arc& gap : complement_of_arc_union(arcs)) {
    // Inside a gap no Im(z_j e^{-it}) crosses [-1, 1], so signs are fixed.
    const double mid = gap.center_angle;
    std::array<double, 3> sign{};
    int positive = 0;
    for (int j = 0; j < 3; ++j) {
      sign[j] = (e[j] * std::conj(unit(mid))).imag() > 0.0 ? 1.0 : -1.0;
      positive += sign[j] > 0.0;
    }
    if (positive == 0 || positive == 3) continue;
    auto margin = [&](double t) {
      const Complex r = std::conj(unit(t));
      double m = std::numeric_limits<double>::infinity();
      for (int j = 0; j < 3; ++j) m = std::min(m, sign[j] * (e[j] * r).imag() - 1.0);
      return m;
    };
    // Each signed term is a positive sine arc on the gap, so the minimum is concave.
    const auto [t, neg] = detail::minimize_unimodal([&](double x) { return -margin(x); },
                                                    mid - gap.half_width, mid + gap.half_width);
    // Recompute with the division used by witness_is_valid so the stated margin holds exactly.
    const Complex a = unit(t);
    double m = -neg;
    for (int j = 0; j < 3; ++j) m = std::min(m, sign[j] * (e[j] / a).imag() - 1.0);
    if (!(m > 0.0) || (best && m <= best->margin)) continue;
    StripWitness w{a, {}, {}, m};
    for (int j = 0; j < 3; ++j) (sign[j] > 0.0 ? w.above : w.below).push_back(j);
    best = w;
  }
  return best;
}

bool witness_is_valid(const std::array<Complex, 3>& e, const StripWitness& w) {
  if (!(w.margin > 0.0) || w.above.empty() || w.below.empty() ||
      w.above.size() + w.below.size() != 3) {
    return false;
  }
  std::array<int, 3> seen{};
  for (const int j : w.above) {
    if (j < 0 || j > 2 || seen[j]++ || (e[j] / w.a).imag() < 1.0 + w.margin) return false;
  }
  for (const int j : w.below) {
    if (j < 0 || j > 2 || seen[j]++ || (e[j] / w.a).imag() > -1.0 - w.margin) return false;
  }
  return true;
}

Collinearity approximately_collinear(Complex z, Complex w) {
  const Arc a = sigma_arc(z);
  const Arc b = sigma_arc(w);
  if (a.is_whole() || b.is_whole()) {
    const double t = a.is_whole() ? b.center_angle : a.center_angle;
    return {true, unit(t), kPi};
  }
  const double delta = wrap_signed(b.center_angle - a.center_angle);
  const double overlap = a.half_width + b.half_width - std::abs(delta);
  if (overlap < 0.0) return {false, std::nullopt, overlap};
  const double lo = std::max(-a.half_width, delta - b.half_width);
  const double hi = std::min(a.half_width, delta + b.half_width);
  return {true, unit(a.center_angle + 0.5 * (lo + hi)), overlap};
}

Complex equal_imaginary_rotation(Complex z1, Complex z2) {
  const Complex s = z1 + z2;
  const double m = std::abs(s);
  if (m == 0.0) throw std::invalid_argument("equal_imaginary_rotation: z1 + z2 = 0");
  // Re((z1 + z2) / b) = |z1 + z2| > 0, so this sign is the one that can work.
  return s / m;
}

std::optional<CaseClassification> classify_unchecked(const std::array<Complex, 3>& e) {
  if (auto w = find_strip_witness(e)) return StripSplittable{*w};

  std::optional<CaseI> case_one;
  double case_one_width = -1.0;
  std::optional<CaseII> case_two;
  double case_two_score = -std::numeric_limits<double>::infinity();

  for (int m = 0; m < 3; ++m) {
    const int p = (m + 1) % 3;
    const int q = (m + 2) % 3;
    if (!approximately_collinear(e[m], e[p]).collinear ||
        !approximately_collinear(e[m], e[q]).collinear) {
      continue;
    }
    const double r = std::abs(e[m]);
    if (r <= 1.0) continue;
    const double t0 = std::arg(e[m]);
    const double alpha = std::asin(1.0 / r);
    const Window ip = rotated_window(e[p], t0, alpha);
    const Window iq = rotated_window(e[q], t0, alpha);
    if (ip.empty() || iq.empty()) continue;

    const double lo = std::max(ip.lo, iq.lo);
    const double hi = std::min(ip.hi, iq.hi);
    if (lo <= hi) {
      if (hi - lo > case_one_width) {
        case_one_width = hi - lo;
        case_one = CaseI{unit(t0 + 0.5 * (lo + hi))};
      }
      continue;
    }
    // Disjoint windows: the upper one supplies the first point.
    const bool p_upper = ip.lo > iq.lo;
    const int first = p_upper ? p : q;
    const int third = p_upper ? q : p;
    const Complex a = unit(t0 + (p_upper ? ip.lo : iq.lo));
    const double score = std::abs((e[third] / a).imag()) - 1.0;
    if (score > case_two_score) {
      case_two_score = score;
      case_two = CaseII{a, {first, m, third}};
    }
  }
  if (case_one) return *case_one;
  if (case_two) return *case_two;
  return std::nullopt;
}

CaseClassification classify_distinguished(const split::DistinguishedTriple& e) {
  auto c = classify_unchecked(e.points());
  if (!c) throw std::runtime_error("classify_distinguished: no case could be established");
  return *c;
}

CaseClassification classify_distinguished(const std::array<Complex, 3>& e) {
  return classify_distinguished(split::DistinguishedTriple::make(e));
}

bool check_case_conditions(const std::array<Complex, 3>& e, const CaseClassification& c,
                           double tolerance) {
  auto in_sigma = [&](Complex w) {
    return w.real() >= -tolerance && std::abs(w.imag()) <= 1.0 + tolerance;
  };
  if (const auto* s = std::get_if<StripSplittable>(&c)) return witness_is_valid(e, s->witness);
  if (const auto* one = std::get_if<CaseI>(&c)) {
    return std::all_of(e.begin(), e.end(), [&](Complex z) { return in_sigma(z / one->a); });
  }
  const auto& two = std::get<CaseII>(c);
  const Complex w1 = e[two.order[0]] / two.a;
  const Complex w2 = e[two.order[1]] / two.a;
  const Complex w3 = e[two.order[2]] / two.a;
  return w1.real() >= -tolerance && std::abs(w1.imag() - 1.0) <= tolerance && in_sigma(w2) &&
         w3.imag() < -1.0 + tolerance &&
         approximately_collinear(e[two.order[1]], e[two.order[2]]).overlap >= -tolerance;
}

}  // namespace sixsplit::strip
