#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "sixsplit/strip/strip.hpp"

namespace {

using namespace sixsplit::strip;
using sixsplit::testing::grid_sigma_overlap;
using sixsplit::testing::grid_strip_margin;
using sixsplit::testing::kPi;
using sixsplit::testing::random_distinguished;
using Triple = std::array<Complex, 3>;

const Complex I(0.0, 1.0);

bool same_angle(double a, double b, double tol) { return std::abs(wrap_signed(a - b)) < tol; }

TEST(Arcs, Wrapping) {
  EXPECT_NEAR(wrap_angle(-0.5), kTwoPi - 0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(7.0), 7.0 - kTwoPi, 1e-15);
  EXPECT_NEAR(wrap_signed(3.5), 3.5 - kTwoPi, 1e-15);
  EXPECT_TRUE(Arc::make(0.0, 0.5).contains(kTwoPi - 0.25));
  EXPECT_FALSE(Arc::make(0.0, 0.5).contains(1.0));
  EXPECT_TRUE(Arc::make(1.0, 4.0).is_whole());
}

TEST(Arcs, ForbiddenExamples) {
  const auto a = forbidden_arcs(2.0 * I);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(same_angle(a[0].center_angle, kPi / 2.0, 1e-15) ||
              same_angle(a[0].center_angle, 3.0 * kPi / 2.0, 1e-15));
  EXPECT_TRUE(same_angle(a[0].center_angle + kPi, a[1].center_angle, 1e-15));
  EXPECT_NEAR(a[0].half_width, kPi / 6.0, 1e-15);
  EXPECT_NEAR(a[1].half_width, kPi / 6.0, 1e-15);

  const auto b = forbidden_arcs(3.0);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(same_angle(b[0].center_angle, 0.0, 1e-15) || same_angle(b[0].center_angle, kPi, 1e-15));
  EXPECT_NEAR(b[0].half_width, std::asin(1.0 / 3.0), 1e-15);

  const auto c = forbidden_arcs(0.5);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].is_whole());
}

TEST(Arcs, ComplementExamples) {
  const auto all = complement_of_arc_union({});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].is_whole());

  const auto half = complement_of_arc_union({Arc::make(0.0, kPi / 2.0)});
  ASSERT_EQ(half.size(), 1u);
  EXPECT_NEAR(half[0].center_angle, kPi, 1e-15);
  EXPECT_NEAR(half[0].half_width, kPi / 2.0, 1e-15);

  EXPECT_TRUE(complement_of_arc_union({Arc::make(0.0, kPi / 2.0), Arc::make(kPi, kPi / 2.0)}).empty());
  EXPECT_TRUE(complement_of_arc_union({Arc::make(1.0, 2.0), Arc::make(4.0, 2.0)}).empty());
}

TEST(Arcs, ComplementAgainstSampling) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi), width(0.01, 1.2);
  for (int k = 0; k < 300; ++k) {
    std::vector<Arc> arcs;
    const int n = 1 + k % 6;
    for (int j = 0; j < n; ++j) arcs.push_back(Arc::make(ang(rng), width(rng)));
    const auto comp = complement_of_arc_union(arcs);
    double measure = 0.0;
    for (const Arc& a : comp) measure += a.measure();
    EXPECT_NEAR(measure + union_measure(arcs), kTwoPi, 1e-12);
    for (int s = 0; s < 500; ++s) {
      const double t = ang(rng);
      bool in_union = false;
      double edge = HUGE_VAL;
      for (const Arc& a : arcs) {
        in_union = in_union || a.contains(t);
        edge = std::min(edge, std::abs(std::abs(wrap_signed(t - a.center_angle)) - a.half_width));
      }
      if (edge < 1e-12) continue;
      bool in_comp = false;
      for (const Arc& a : comp) in_comp = in_comp || a.contains(t);
      EXPECT_NE(in_union, in_comp);
    }
  }
}

TEST(Arcs, ForbiddenSoundness) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> mod(1.0 + 1e-6, 20.0), ang(0.0, kTwoPi);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = std::polar(mod(rng), ang(rng));
    const auto arcs = forbidden_arcs(z);
    for (int s = 0; s < 1000; ++s) {
      const double t = ang(rng);
      const double y = std::abs((z * std::polar(1.0, -t)).imag()) - 1.0;
      if (std::abs(y) < 1e-10) continue;
      bool member = false;
      for (const Arc& a : arcs) member = member || a.contains(t);
      ASSERT_EQ(member, y <= 0.0) << "z=" << z << " t=" << t;
    }
  }
}

TEST(Arcs, AngularMeasureBound) {
  const double bound = 4.0 * std::asin(1.0 / std::sqrt(3.0)) + 8.0 * std::asin(1.0 / std::sqrt(5.0));
  EXPECT_NEAR(bound, 6.17110, 1e-5);
  EXPECT_LT(bound, kTwoPi);
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int k = 0; k < 20000; ++k) {
    const Triple e = random_distinguished(rng, 3.0 + (k % 5));
    int small = 0;
    for (const Complex z : e) small += std::abs(z) < std::sqrt(5.0);
    if (small > 1) continue;
    ++checked;
    std::vector<Arc> arcs;
    for (const Complex z : e) {
      for (const Arc& a : forbidden_arcs(z)) arcs.push_back(a);
    }
    EXPECT_LE(union_measure(arcs), bound + 1e-12);
  }
  EXPECT_GT(checked, 10000);
}

TEST(Strip, WitnessExamples) {
  const auto w = find_strip_witness({3.0, -3.0, 3.0 * I});
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(witness_is_valid({3.0, -3.0, 3.0 * I}, *w));
  // Optimum at a = +-e^{i pi/4} with margin 3/sqrt2 - 1; 3 alone on its side.
  EXPECT_NEAR(std::abs(std::imag(w->a * w->a)), 1.0, 1e-7);
  EXPECT_NEAR(w->margin, 3.0 / std::sqrt(2.0) - 1.0, 1e-7);
  const std::vector<int>& lone = w->above.size() == 1 ? w->above : w->below;
  ASSERT_EQ(lone.size(), 1u);
  EXPECT_EQ(lone[0], 0);
  if (w->a.real() > 0.0) {
    EXPECT_EQ(w->below, std::vector<int>{0});
  }
  EXPECT_NEAR(w->margin, grid_strip_margin(Triple{3.0, -3.0, 3.0 * I}, 1e-4), 3.0 * 1e-4);

  EXPECT_FALSE(find_strip_witness({3.0, 5.5, 8.0}).has_value());
  EXPECT_EQ(grid_strip_margin(Triple{3.0, 5.5, 8.0}, 1e-4), -HUGE_VAL);

  const Triple e3{5.0 * I, -5.0 * I, 10.0};
  const auto w3 = find_strip_witness(e3);
  ASSERT_TRUE(w3.has_value());
  EXPECT_TRUE(witness_is_valid(e3, *w3));
  const auto side = [&](int j) { return std::imag(e3[j] / w3->a) > 0.0; };
  EXPECT_NE(side(0), side(1));
  // Grid error is at most max|z| times the step.
  EXPECT_NEAR(w3->margin, grid_strip_margin(e3, 1e-4), 10.0 * 1e-4);
  EXPECT_GE(w3->margin, grid_strip_margin(e3, 1e-4));
}

TEST(Strip, WitnessSoundAndComplete) {
  std::mt19937_64 rng(14);
  int with = 0, misses = 0;
  for (int k = 0; k < 1000; ++k) {
    const Triple e = random_distinguished(rng, 4.0 + (k % 8));
    const auto w = find_strip_witness(e);
    if (w) {
      EXPECT_GT(w->margin, 0.0);
      EXPECT_FALSE(w->above.empty());
      EXPECT_FALSE(w->below.empty());
      EXPECT_EQ(w->above.size() + w->below.size(), 3u);
      for (int j : w->above) EXPECT_GE(std::imag(e[j] / w->a), 1.0 + w->margin - 1e-12);
      for (int j : w->below) EXPECT_LE(std::imag(e[j] / w->a), -1.0 - w->margin + 1e-12);
    }
    const double grid = grid_strip_margin(e, 1e-4);
    if (grid >= 1e-3) {
      ++with;
      if (!w) ++misses;
      else EXPECT_GE(w->margin, grid - 1e-9);
    }
  }
  EXPECT_EQ(misses, 0);
  EXPECT_GT(with, 300);
}

TEST(Collinear, Examples) {
  const Collinearity a = approximately_collinear(3.0, 4.0);
  EXPECT_TRUE(a.collinear);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_NEAR(std::abs(*a.witness - 1.0), 0.0, 1e-12);

  EXPECT_FALSE(approximately_collinear(3.0 * I, -3.0 * I).collinear);

  EXPECT_FALSE(approximately_collinear(3.0 * I, Complex(5.0, -2.0)).collinear);
  EXPECT_LT(grid_sigma_overlap(3.0 * I, Complex(5.0, -2.0), 1e-4), 0.0);
}

TEST(Collinear, AgreesWithGrid) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> mod(0.2, 12.0), ang(0.0, kTwoPi);
  int checked = 0;
  for (int k = 0; checked < 1000; ++k) {
    const Complex z = std::polar(mod(rng), ang(rng));
    const Complex w = std::polar(mod(rng), ang(rng));
    const Collinearity c = approximately_collinear(z, w);
    if (std::abs(c.overlap) <= 1e-3) continue;
    ++checked;
    const bool grid = grid_sigma_overlap(z, w, 1e-4) >= 0.0;
    ASSERT_EQ(c.collinear, grid) << z << " " << w;
    if (c.collinear) {
      EXPECT_TRUE(std::real(z / *c.witness) >= -1e-12 && std::abs(std::imag(z / *c.witness)) <= 1.0 + 1e-12);
      EXPECT_TRUE(std::real(w / *c.witness) >= -1e-12 && std::abs(std::imag(w / *c.witness)) <= 1.0 + 1e-12);
    }
  }
}

TEST(EqualImaginary, Examples) {
  EXPECT_NEAR(std::abs(equal_imaginary_rotation(Complex(2, 1), Complex(2, -1)) - 1.0), 0.0, 1e-15);
  const Complex b = equal_imaginary_rotation(Complex(-1, 2), Complex(1, 2));
  EXPECT_NEAR(std::abs(b - I), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(Complex(-1, 2) / b - Complex(2, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(Complex(1, 2) / b - Complex(2, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(equal_imaginary_rotation(3.0, 4.0) - 1.0), 0.0, 1e-15);
  EXPECT_THROW(equal_imaginary_rotation(2.0 * I, -2.0 * I), std::invalid_argument);
}

TEST(EqualImaginary, Postconditions) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> mod(1.0 + 1e-9, 15.0), ang(0.0, kTwoPi);
  int checked = 0;
  while (checked < 10000) {
    const Complex z = std::polar(mod(rng), ang(rng));
    const Complex w = std::polar(mod(rng), ang(rng));
    if (!approximately_collinear(z, w).collinear) continue;
    ++checked;
    const Complex b = equal_imaginary_rotation(z, w);
    EXPECT_LT(std::abs(std::imag(z / b) + std::imag(w / b)), 1e-12 * (1.0 + std::abs(z) + std::abs(w)));
    for (const Complex p : {z / b, w / b}) {
      EXPECT_GE(p.real(), -1e-12);
      EXPECT_LE(std::abs(p.imag()), 1.0 + 1e-12);
    }
  }
}

TEST(Classify, Examples) {
  const CaseClassification s = classify_distinguished(Triple{3.0, -3.0, 3.0 * I});
  EXPECT_TRUE(std::holds_alternative<StripSplittable>(s));

  const CaseClassification c = classify_distinguished(Triple{3.0, 5.5, 8.0});
  ASSERT_TRUE(std::holds_alternative<CaseI>(c));
  EXPECT_NEAR(std::abs(std::get<CaseI>(c).a - 1.0), 0.0, 1e-12);
  EXPECT_TRUE(check_case_conditions({3.0, 5.5, 8.0}, c));

  EXPECT_THROW(classify_distinguished(Triple{0.5, 3.0, 6.0}), std::invalid_argument);
}

TEST(Classify, ConditionsHold) {
  std::mt19937_64 rng(17);
  int counts[3] = {0, 0, 0};
  for (int k = 0; k < 20000; ++k) {
    const Triple e = random_distinguished(rng, 3.0 + (k % 10));
    const CaseClassification c = classify_distinguished(e);
    ++counts[c.index()];
    ASSERT_TRUE(check_case_conditions(e, c)) << e[0] << e[1] << e[2] << " case " << c.index();
  }
  EXPECT_GT(counts[0], 0);
  EXPECT_GT(counts[1], 0);
  EXPECT_GT(counts[2], 0);
}

TEST(Classify, CaseIIConditionsByHand) {
  // Independent check of the enumeration: first on Im = 1, second in the
  // half-strip, third below -1 and collinear with the second.
  std::mt19937_64 rng(18);
  int seen = 0;
  for (int k = 0; k < 20000 && seen < 500; ++k) {
    const Triple e = random_distinguished(rng, 3.0 + (k % 10));
    const CaseClassification c = classify_distinguished(e);
    if (!std::holds_alternative<CaseII>(c)) continue;
    ++seen;
    const CaseII& d = std::get<CaseII>(c);
    const Complex z1 = e[d.order[0]] / d.a, z2 = e[d.order[1]] / d.a, z3 = e[d.order[2]] / d.a;
    EXPECT_NEAR(z1.imag(), 1.0, 1e-9);
    EXPECT_GE(z1.real(), -1e-9);
    EXPECT_GE(z2.real(), -1e-9);
    EXPECT_LE(std::abs(z2.imag()), 1.0 + 1e-9);
    EXPECT_LT(z3.imag(), -1.0 + 1e-9);
    EXPECT_TRUE(approximately_collinear(e[d.order[1]], e[d.order[2]]).collinear);
  }
  EXPECT_GT(seen, 0);
}

}  // namespace
