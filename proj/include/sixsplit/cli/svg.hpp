#pragma once

#include <optional>
#include <string>

#include "sixsplit/certify/fuzz.hpp"
#include "sixsplit/certify/verify.hpp"

namespace sixsplit::cli {

enum class View { Plane, Sphere };

/// "plane" or "sphere"; throws std::invalid_argument otherwise.
View parse_view(const std::string& name);

struct Scene {
  certify::SixPoints points;
  std::optional<std::array<cp1::GeneralizedDisc, 3>> discs;
  std::optional<certify::Pairing> pairing;
};

/// Deterministic 1000x1000 SVG document.
std::string render_svg(const Scene& scene, View view);

}  // namespace sixsplit::cli
