#pragma once

#include <array>
#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "sixsplit/split/distinguished.hpp"
#include "sixsplit/strip/arc.hpp"

namespace sixsplit::strip {

using Complex = std::complex<double>;

/// Rotation a (unit) with |Im(z_j / a)| >= 1 + margin for every point, the
/// points with positive imaginary part listed in `above`, the rest in `below`.
struct StripWitness {
  Complex a;
  std::vector<int> above;
  std::vector<int> below;
  double margin = 0.0;
};

struct StripSplittable {
  StripWitness witness;
};

/// One rotation a placing every point in the half-strip {Re >= 0, |Im| <= 1}.
struct CaseI {
  Complex a;
};

/// order[k] is the index of the (k+1)-th point of the enumeration: the first
/// sits on Im = 1 after rotation by a, the second inside the half-strip, the
/// third below Im = -1 and approximately collinear with the second.
struct CaseII {
  Complex a;
  std::array<int, 3> order;
};

using CaseClassification = std::variant<StripSplittable, CaseI, CaseII>;

/// Directions e^{it} with |Im(z e^{-it})| <= 1: two arcs of half-width
/// asin(1/|z|) about arg z and arg z + pi, or the whole circle when |z| <= 1.
std::vector<Arc> forbidden_arcs(Complex z);

/// Directions a with z / a in the half-strip.
Arc sigma_arc(Complex z);

/// Smallest |Im(z_j / a)| - 1 over the triple.
double strip_margin(const std::array<Complex, 3>& e, Complex a);

/// Maximal-margin rotation splitting the triple by the strip |Im| <= 1, if any.
std::optional<StripWitness> find_strip_witness(const std::array<Complex, 3>& e);

/// True when the witness separates the triple strictly with the stated sides.
bool witness_is_valid(const std::array<Complex, 3>& e, const StripWitness& w);

struct Collinearity {
  bool collinear = false;
  std::optional<Complex> witness;  // midpoint of the common sigma-arc directions
  double overlap = 0.0;            // signed angular overlap of the two sigma arcs
};

Collinearity approximately_collinear(Complex z, Complex w);

/// b = (z1 + z2) / |z1 + z2|, so that Im(z1 / b) = -Im(z2 / b).
/// Throws std::invalid_argument when z1 + z2 = 0.
Complex equal_imaginary_rotation(Complex z1, Complex z2);

/// Case analysis of a triple that may not be splittable by a strip.
/// Throws std::invalid_argument if the points violate the distinguished
/// invariants, std::runtime_error if no case can be established numerically.
CaseClassification classify_distinguished(const std::array<Complex, 3>& e);
CaseClassification classify_distinguished(const split::DistinguishedTriple& e);

/// Same analysis without the invariant checks; empty when it breaks down.
std::optional<CaseClassification> classify_unchecked(const std::array<Complex, 3>& e);

/// Machine check of the stated conditions of a classification.
bool check_case_conditions(const std::array<Complex, 3>& e, const CaseClassification& c,
                           double tolerance = 1e-9);

}  // namespace sixsplit::strip
