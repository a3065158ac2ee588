#include "sixsplit/split/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>

#include "sixsplit/certify/oracle.hpp"
#include "sixsplit/split/discs.hpp"

namespace sixsplit::split {

namespace {

using Triple = std::array<Complex, 3>;
using Discs = std::array<GeneralizedDisc, 3>;

constexpr int kSlotMinus = 0;
constexpr int kSlotPlus = 1;
constexpr int kSlotInf = 2;

// Discs in frame coordinates with the slots each must contain.
struct Construction {
  Discs discs;
  Pairing slots;
};

// Input point p sits at slot s of the frame at to_frame(conj^c(p)).
struct Chart {
  MobiusMap to_frame;
  bool conj;
  std::array<int, 6> slot_to_input;
  std::string name;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

GeneralizedDisc below_line(double height) {
  return GeneralizedDisc::half_plane(Complex(0.0, -1.0), -height);
}

GeneralizedDisc rotate(const GeneralizedDisc& d, Complex a) {
  return cp1::disc_pushforward(MobiusMap::affine(a, 0.0), d);
}

void check_distinct(const std::array<SpherePoint, 6>& points) {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("duplicate points at indices " + std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }
}

// --- constructions in the normalized frame -------------------------------

Construction strip_construction(const Triple& e, const strip::StripWitness& w) {
  const bool reflect = w.below.size() == 2;
  const std::vector<int>& pair = reflect ? w.below : w.above;
  const int lone = reflect ? w.above.front() : w.below.front();
  auto view = [&](int j) {
    const Complex u = e[j] / w.a;
    return reflect ? std::conj(u) : u;
  };
  Discs d{GeneralizedDisc::unit_disk(),
          enclosed_disc_in_halfplane(view(pair[0]), view(pair[1]), 1.0),
          below_line(0.5 * (-1.0 + view(lone).imag()))};
  for (auto& disc : d) disc = rotate(reflect ? cp1::conjugate(disc) : disc, w.a);
  return {d, Pairing{{{kSlotMinus, kSlotPlus}, {3 + pair[0], 3 + pair[1]}, {3 + lone, kSlotInf}}}};
}

// Unit disc for {-1, 1}, F(w1, w2), and the half-plane separating w3 from their hull.
Construction diameter_construction(const Triple& e, Complex a, int i, int j, int k) {
  const GeneralizedDisc unit = GeneralizedDisc::unit_disk();
  const GeneralizedDisc f = diameter_disc(e[i] / a, e[j] / a);
  if (!cp1::discs_disjoint(unit, f).disjoint) {
    throw std::invalid_argument("diameter disc meets the unit disc");
  }
  const GeneralizedDisc h = separating_halfplane(unit, f, e[k] / a);
  return {{unit, rotate(f, a), rotate(h, a)},
          Pairing{{{kSlotMinus, kSlotPlus}, {3 + i, 3 + j}, {3 + k, kSlotInf}}}};
}

Construction case_one_construction(const Triple& e, Complex a) {
  std::array<int, 3> o{0, 1, 2};
  std::sort(o.begin(), o.end(), [&](int x, int y) { return (e[x] / a).real() < (e[y] / a).real(); });
  const Complex w1 = e[o[0]] / a;
  const Complex w2 = e[o[1]] / a;
  const Complex w3 = e[o[2]] / a;
  if (w2.real() == w3.real() && w3.imag() == w1.imag()) std::swap(o[1], o[2]);
  return diameter_construction(e, a, o[0], o[1], o[2]);
}

Construction case_two_construction(const Triple& e, const strip::CaseII& c, std::string& tag) {
  const auto [i1, i2, i3] = c.order;
  if (std::abs(e[i1]) >= std::abs(e[i2])) {
    tag = "case-ii-large";
    // Both (z1, z2) and (z2, z3) are approximately collinear; leave out the largest.
    if (std::abs(e[i3]) >= std::abs(e[i1])) return diameter_construction(e, 1.0, i1, i2, i3);
    return diameter_construction(e, 1.0, i2, i3, i1);
  }
  tag = "case-ii-lifted";
  const Complex u1 = e[i1] / c.a;
  const Complex u2 = e[i2] / c.a;
  const Complex u3 = e[i3] / c.a;
  Discs d{GeneralizedDisc::unit_disk(), lifted_disc(u1, u2), below_line(0.5 * (-1.0 + u3.imag()))};
  for (auto& disc : d) disc = rotate(disc, c.a);
  return {d, Pairing{{{kSlotMinus, kSlotPlus}, {3 + i1, 3 + i2}, {3 + i3, kSlotInf}}}};
}

Construction fpm_construction(const Triple& e, int i, int j, int k) {
  const GeneralizedDisc f = diameter_disc(e[i], e[j]);
  const GeneralizedDisc g = fallback_fpm(e[i], e[j]);
  // Direct hull test of the discs actually used; the covering test is only informative.
  const GeneralizedDisc h = separating_halfplane(g, f, e[k]);
  return {{g, f, h}, Pairing{{{kSlotMinus, kSlotPlus}, {3 + i, 3 + j}, {3 + k, kSlotInf}}}};
}

constexpr std::array<std::array<int, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

// Candidate constructions for one frame, in the order they are tried.
void for_each_construction(const Triple& e, bool checked,
                           const std::function<bool(const std::string&,
                                                    const std::function<Construction()>&)>& visit) {
  std::optional<strip::CaseClassification> cls;
  try {
    cls = checked ? std::optional(strip::classify_distinguished(DistinguishedTriple::make(e)))
                  : strip::classify_unchecked(e);
  } catch (const std::exception&) {
    cls = strip::classify_unchecked(e);
  }
  if (cls) {
    if (const auto* s = std::get_if<strip::StripSplittable>(&*cls)) {
      if (visit("strip", [&] { return strip_construction(e, s->witness); })) return;
    } else if (const auto* one = std::get_if<strip::CaseI>(&*cls)) {
      if (visit("case-i", [&] { return case_one_construction(e, one->a); })) return;
    } else {
      const auto& two = std::get<strip::CaseII>(*cls);
      std::string tag = std::abs(e[two.order[0]]) >= std::abs(e[two.order[1]]) ? "case-ii-large"
                                                                                 : "case-ii-lifted";
      if (visit(tag, [&] { return case_two_construction(e, two, tag); })) return;
    }
  }
  for (const auto& [i, j, k] : kPairs) {
    const Complex zi = e[i];
    const Complex zj = e[j];
    const GeneralizedDisc f = diameter_disc(zi, zj);
    if (std::abs(f.center()) > 1.0 + f.radius()) continue;
    const std::string tag = "fpm(" + std::to_string(i) + "," + std::to_string(j) + ")" +
                            (covering_check(zi, zj, e[k]) ? "" : "[uncovered]");
    if (visit(tag, [&, i = i, j = j, k = k] { return fpm_construction(e, i, j, k); })) return;
  }
  for (const auto& [i, j, k] : kPairs) {
    const std::string tag = "diameter(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (visit(tag, [&, i = i, j = j, k = k] { return diameter_construction(e, 1.0, i, j, k); })) {
      return;
    }
  }
}

// --- certification --------------------------------------------------------

// Largest uniform slack obtainable by changing only the cap radii.
std::optional<Discs> rebalance(const std::array<SpherePoint, 6>& points, const Discs& discs,
                               const Pairing& pairing) {
  std::array<cp1::SphericalCap, 3> caps{};
  std::array<double, 3> inner{};
  std::array<double, 3> outer{};
  for (int j = 0; j < 3; ++j) {
    caps[j] = cp1::disc_to_cap(discs[j]);
    inner[j] = 0.0;
    outer[j] = std::numbers::pi;
    for (int i = 0; i < 6; ++i) {
      const double d = cp1::angle_between(caps[j].center, points[i].to_sphere());
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
      t = std::min(t, (cp1::angle_between(caps[a].center, caps[b].center) - inner[a] - inner[b]) / 3.0);
    }
  }
  if (!(t > 0.0)) return std::nullopt;
  Discs out = discs;
  for (int j = 0; j < 3; ++j) {
    out[j] = cp1::cap_to_disc({caps[j].center, std::min(inner[j] + t, std::numbers::pi - 1e-12)});
  }
  return out;
}

class Engine {
 public:
  Engine(const std::array<SpherePoint, 6>& points, const SplitOptions& options)
      : points_(points), options_(options) {}

  std::optional<CertifiedSplit> try_chart(const Chart& chart, bool checked) {
    std::array<SpherePoint, 6> frame = {SpherePoint::infinity(), SpherePoint::infinity(),
                                        SpherePoint::infinity(), SpherePoint::infinity(),
                                        SpherePoint::infinity(), SpherePoint::infinity()};
    for (int s = 0; s < 6; ++s) {
      const SpherePoint& p = points_[chart.slot_to_input[s]];
      frame[s] = chart.to_frame(chart.conj ? cp1::conjugate(p) : p);
    }
    Triple e{};
    for (int j = 0; j < 3; ++j) {
      if (frame[3 + j].is_infinity()) {
        log(chart.name + ": degenerate frame");
        return std::nullopt;
      }
      e[j] = frame[3 + j].value();
    }
    std::optional<CertifiedSplit> result;
    for_each_construction(e, checked, [&](const std::string& tag, const std::function<Construction()>& make) {
      const std::string where = chart.name + "/" + tag;
      try {
        const Construction c = make();
        result = certify(chart, c);
        log(where + (result ? ": certified margin " + fmt(result->margin) : ": not certified"));
      } catch (const std::exception& ex) {
        log(where + ": " + ex.what());
      }
      return result.has_value();
    });
    return result;
  }

  std::optional<CertifiedSplit> try_oracle() {
    log("oracle: search budget " + std::to_string(options_.oracle_budget));
    const auto found = certify::oracle_search(points_, options_.oracle_budget, options_.oracle_seed,
                                              options_.epsilon);
    if (!found) {
      log("oracle: no certified split");
      return std::nullopt;
    }
    log("oracle: certified margin " + fmt(found->margin));
    CertifiedSplit out;
    out.discs = found->discs;
    out.construction = found->discs;
    out.pairing = found->pairing;
    out.margin = found->margin;
    out.used_oracle = true;
    return out;
  }

  void log(std::string line) { transcript_.push_back(std::move(line)); }
  std::vector<std::string>& transcript() { return transcript_; }
  const std::array<SpherePoint, 6>& points() const { return points_; }

 private:
  std::optional<CertifiedSplit> certify(const Chart& chart, const Construction& c) {
    const MobiusMap back = chart.to_frame.inverse();
    Discs pulled = c.discs;
    Pairing pairing{};
    for (int j = 0; j < 3; ++j) {
      pulled[j] = cp1::disc_pushforward(back, c.discs[j]);
      if (chart.conj) pulled[j] = cp1::conjugate(pulled[j]);
      for (int k = 0; k < 2; ++k) pairing[j][k] = chart.slot_to_input[c.slots[j][k]];
    }
    const auto balanced = rebalance(points_, pulled, pairing);
    if (!balanced) return std::nullopt;
    const certify::Certificate cert =
        certify::verify_split(points_, *balanced, pairing, options_.epsilon);
    if (!cert.pass) return std::nullopt;
    CertifiedSplit out;
    out.discs = *balanced;
    out.construction = pulled;
    out.pairing = pairing;
    out.margin = cert.margin;
    return out;
  }

  std::array<SpherePoint, 6> points_;
  SplitOptions options_;
  std::vector<std::string> transcript_;
};

// --- charts ---------------------------------------------------------------

int most_isolated(const std::array<SpherePoint, 6>& points) {
  int best = 0;
  double best_gap = -1.0;
  for (int i = 0; i < 6; ++i) {
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 6; ++j) {
      if (j != i) gap = std::min(gap, cp1::chordal_distance(points[i], points[j]));
    }
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

// Chart with points[inf] at infinity and the closest finite pair at -1, 1.
Chart chart_with_infinity(const std::array<SpherePoint, 6>& points, int inf, std::string name) {
  const MobiusMap rot = cp1::rotation_to_infinity(points[inf]);
  std::array<int, 5> rest{};
  std::array<Complex, 5> image{};
  int n = 0;
  for (int i = 0; i < 6; ++i) {
    if (i == inf) continue;
    const SpherePoint p = rot(points[i]);
    if (p.is_infinity()) throw std::invalid_argument("normalization: coincident points");
    rest[n] = i;
    image[n++] = p.value();
  }
  int bi = 0;
  int bj = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const double d = std::abs(image[i] - image[j]);
      if (d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  if (!(best > 0.0)) throw std::invalid_argument("normalization: coincident points");
  // z -> (2z - (zi + zj)) / (zj - zi) sends zi to -1 and zj to 1.
  const Complex span = image[bj] - image[bi];
  const MobiusMap affine = MobiusMap::affine(2.0 / span, -(image[bi] + image[bj]) / span);
  Chart c{affine * rot, false, {rest[bi], rest[bj], inf, 0, 0, 0}, std::move(name)};
  int slot = 3;
  for (int k = 0; k < 5; ++k) {
    if (k != bi && k != bj) c.slot_to_input[slot++] = rest[k];
  }
  return c;
}

// Applies S^power (after conjugation if requested) to a chart's frame, then an
// affine map putting the points nearest -1 and 1 exactly there.
std::optional<Chart> derived_chart(const Chart& base, const std::array<SpherePoint, 6>& points,
                                   int power, bool conj) {
  MobiusMap m = base.to_frame;
  if (conj) m = m.conjugated();
  m = s_map(power) * m;
  const bool flag = base.conj != conj;
  std::array<Complex, 6> image{};
  for (int s = 0; s < 6; ++s) {
    if (s == kSlotInf) continue;
    const SpherePoint& p = points[base.slot_to_input[s]];
    const SpherePoint q = m(flag ? cp1::conjugate(p) : p);
    if (q.is_infinity()) return std::nullopt;
    image[s] = q.value();
  }
  auto nearest = [&](Complex target, int skip) {
    int best = -1;
    for (int s = 0; s < 6; ++s) {
      if (s == kSlotInf || s == skip) continue;
      if (best < 0 || std::abs(image[s] - target) < std::abs(image[best] - target)) best = s;
    }
    return best;
  };
  const int lo = nearest(-1.0, -1);
  const int hi = nearest(1.0, lo);
  const Complex span = image[hi] - image[lo];
  if (span == Complex(0.0, 0.0)) return std::nullopt;
  const MobiusMap affine = MobiusMap::affine(2.0 / span, -(image[lo] + image[hi]) / span);
  Chart c{affine * m, flag, {}, base.name + (conj ? "+conj" : "") +
                                    (power ? "+S" + std::to_string(power) : "")};
  c.slot_to_input[0] = base.slot_to_input[lo];
  c.slot_to_input[1] = base.slot_to_input[hi];
  c.slot_to_input[2] = base.slot_to_input[kSlotInf];
  int slot = 3;
  for (int s = 0; s < 6; ++s) {
    if (s != lo && s != hi && s != kSlotInf) c.slot_to_input[slot++] = base.slot_to_input[s];
  }
  return c;
}

CertifiedSplit run(Engine& engine, const Chart& primary, bool checked, const SplitOptions& options) {
  if (auto r = engine.try_chart(primary, checked)) {
    r->transcript = std::move(engine.transcript());
    return *r;
  }
  if (options.retries) {
    for (const bool conj : {false, true}) {
      for (int power = 0; power < 3; ++power) {
        if (!conj && power == 0) continue;
        const auto chart = derived_chart(primary, engine.points(), power, conj);
        if (!chart) continue;
        if (auto r = engine.try_chart(*chart, false)) {
          r->transcript = std::move(engine.transcript());
          return *r;
        }
      }
    }
    for (int i = 0; i < 6; ++i) {
      if (i == primary.slot_to_input[kSlotInf]) continue;
      const Chart chart = chart_with_infinity(engine.points(), i, "alt" + std::to_string(i));
      if (auto r = engine.try_chart(chart, false)) {
        r->transcript = std::move(engine.transcript());
        return *r;
      }
    }
  }
  if (options.oracle) {
    if (auto r = engine.try_oracle()) {
      r->transcript = std::move(engine.transcript());
      return *r;
    }
  }
  throw ExhaustedError("no branch produced a certified split", engine.transcript());
}

}  // namespace

std::array<SpherePoint, 6> frame_points(const DistinguishedTriple& e) {
  return {SpherePoint::finite(-1.0, 0.0), SpherePoint::finite(1.0, 0.0), SpherePoint::infinity(),
          SpherePoint::finite(e[0]),      SpherePoint::finite(e[1]),     SpherePoint::finite(e[2])};
}

Normalization normalize_six(const std::array<SpherePoint, 6>& points) {
  check_distinct(points);
  int inf = -1;
  for (int i = 0; i < 6; ++i) {
    if (points[i].is_infinity()) inf = i;
  }
  if (inf < 0) inf = most_isolated(points);
  const Chart c = chart_with_infinity(points, inf, "primary");
  Triple e{};
  for (int j = 0; j < 3; ++j) e[j] = c.to_frame(points[c.slot_to_input[3 + j]]).value();
  return {c.to_frame, c.slot_to_input, DistinguishedTriple::make(e)};
}

CertifiedSplit split_by_strip(const DistinguishedTriple& e, const strip::StripWitness& w,
                              const SplitOptions& options) {
  if (!strip::witness_is_valid(e.points(), w)) {
    throw std::invalid_argument("split_by_strip: invalid strip witness");
  }
  const auto points = frame_points(e);
  const Construction c = strip_construction(e.points(), w);
  const auto balanced = rebalance(points, c.discs, c.slots);
  if (!balanced) throw std::runtime_error("split_by_strip: construction leaves no slack");
  const certify::Certificate cert = certify::verify_split(points, *balanced, c.slots, options.epsilon);
  if (!cert.pass) throw std::runtime_error("split_by_strip: construction did not certify");
  CertifiedSplit out;
  out.discs = *balanced;
  out.construction = c.discs;
  out.pairing = c.slots;
  out.margin = cert.margin;
  out.transcript = {"frame/strip: certified margin " + fmt(cert.margin)};
  return out;
}

CertifiedSplit split_distinguished(const DistinguishedTriple& e, const SplitOptions& options) {
  Engine engine(frame_points(e), options);
  const Chart identity{MobiusMap::identity(), false, {0, 1, 2, 3, 4, 5}, "frame"};
  return run(engine, identity, true, options);
}

CertifiedSplit split_six(const std::array<SpherePoint, 6>& points, const SplitOptions& options) {
  check_distinct(points);
  Engine engine(points, options);
  int inf = -1;
  for (int i = 0; i < 6; ++i) {
    if (points[i].is_infinity()) inf = i;
  }
  if (inf < 0) inf = most_isolated(points);
  const Chart primary = chart_with_infinity(points, inf, "primary");
  bool checked = true;
  try {
    normalize_six(points);
  } catch (const std::invalid_argument& ex) {
    engine.log(std::string("primary: ") + ex.what());
    checked = false;
  }
  return run(engine, primary, checked, options);
}

}  // namespace sixsplit::split
