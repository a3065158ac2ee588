#include "sixsplit/cli/json_io.hpp"

#include <cmath>

namespace sixsplit::cli {

namespace {

// Below this |A| the plane view is reported as a half-plane.
constexpr double kFlat = 1e-12;
constexpr double kFormAgreement = 1e-9;

// Adding zero turns -0.0 into 0.0 so documents do not carry signed zeros.
json complex_json(cp1::Complex z) { return {{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

json vec_json(const cp1::Vec3& v) { return {v[0] + 0.0, v[1] + 0.0, v[2] + 0.0}; }

double number(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw InputError(std::string("missing or non-numeric field \"") + key + "\"");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw InputError(std::string("non-finite value in \"") + key + "\"");
  return v;
}

cp1::Complex complex_from(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return {number(j.at(key), "re"), number(j.at(key), "im")};
}

json plane_json(const cp1::GeneralizedDisc& d) {
  switch (d.kind(kFlat)) {
    case cp1::DiscKind::Disk:
      return {{"kind", "disk"}, {"center", complex_json(d.center())}, {"radius", d.radius()}};
    case cp1::DiscKind::Codisk:
      return {{"kind", "codisk"}, {"center", complex_json(d.center())}, {"radius", d.radius()}};
    case cp1::DiscKind::HalfPlane:
      return {{"kind", "halfplane"}, {"normal", complex_json(d.normal())}, {"offset", d.offset()}};
  }
  return {};
}

cp1::GeneralizedDisc plane_from_json(const json& p) {
  if (!p.is_object() || !p.contains("kind") || !p.at("kind").is_string()) {
    throw InputError("plane disc without \"kind\"");
  }
  const std::string kind = p.at("kind").get<std::string>();
  try {
    if (kind == "disk") return cp1::GeneralizedDisc::disk(complex_from(p, "center"), number(p, "radius"));
    if (kind == "codisk") {
      return cp1::GeneralizedDisc::codisk(complex_from(p, "center"), number(p, "radius"));
    }
    if (kind == "halfplane") {
      return cp1::GeneralizedDisc::half_plane(complex_from(p, "normal"), number(p, "offset"));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  throw InputError("unknown disc kind \"" + kind + "\"");
}

cp1::GeneralizedDisc cap_from_json(const json& c) {
  if (!c.is_object() || !c.contains("center") || !c.at("center").is_array() ||
      c.at("center").size() != 3) {
    throw InputError("cap needs a three-component \"center\"");
  }
  cp1::Vec3 u{};
  for (int k = 0; k < 3; ++k) {
    if (!c.at("center")[k].is_number()) throw InputError("non-numeric cap center");
    u[k] = c.at("center")[k].get<double>();
  }
  const double rho = number(c, "angular_radius");
  const double len = cp1::norm(u);
  if (!std::isfinite(len) || std::abs(len - 1.0) > 1e-9) throw InputError("cap center must be a unit vector");
  if (!(rho > 0.0) || !(rho < std::numbers::pi)) throw InputError("cap radius must lie in (0, pi)");
  return cp1::cap_to_disc({u, rho});
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("malformed JSON: ") + ex.what());
  }
}

json point_to_json(const cp1::SpherePoint& p) {
  if (p.is_infinity()) return {{"inf", true}};
  return complex_json(p.value());
}

cp1::SpherePoint point_from_json(const json& j) {
  if (j.is_object() && j.contains("inf")) {
    if (!j.at("inf").is_boolean() || !j.at("inf").get<bool>()) {
      throw InputError("\"inf\" must be true");
    }
    return cp1::SpherePoint::infinity();
  }
  return cp1::SpherePoint::finite(number(j, "re"), number(j, "im"));
}

certify::SixPoints points_from_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.at("points").is_array()) {
    throw InputError("document needs a \"points\" array");
  }
  const json& arr = doc.at("points");
  if (arr.size() != 6) {
    throw InputError("expected exactly six points, got " + std::to_string(arr.size()));
  }
  certify::SixPoints p{cp1::SpherePoint::infinity(), cp1::SpherePoint::infinity(),
                       cp1::SpherePoint::infinity(), cp1::SpherePoint::infinity(),
                       cp1::SpherePoint::infinity(), cp1::SpherePoint::infinity()};
  for (int i = 0; i < 6; ++i) p[i] = point_from_json(arr[i]);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (p[i] == p[j]) {
        throw InputError("duplicate points at indices " + std::to_string(i) + " and " +
                         std::to_string(j));
      }
    }
  }
  return p;
}

std::optional<double> epsilon_from_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("tolerance")) return std::nullopt;
  const double eps = number(doc.at("tolerance"), "epsilon");
  if (!(eps >= 0.0)) throw InputError("epsilon must be nonnegative");
  return eps;
}

json disc_to_json(const cp1::GeneralizedDisc& d) {
  const cp1::SphericalCap cap = cp1::disc_to_cap(d);
  json out = {{"cap", {{"center", vec_json(cap.center)},
                       {"angular_radius", cap.angular_radius}}},
              {"plane", plane_json(d)}};
  const cp1::SphericalCap back = cp1::disc_to_cap(plane_from_json(out.at("plane")));
  if (cp1::cap_distance(cap, back) > kFormAgreement) {
    throw std::logic_error("plane and cap forms of a disc disagree");
  }
  return out;
}

cp1::GeneralizedDisc disc_from_json(const json& j) {
  if (!j.is_object()) throw InputError("disc must be an object");
  if (j.contains("cap")) return cap_from_json(j.at("cap"));
  if (j.contains("plane")) return plane_from_json(j.at("plane"));
  throw InputError("disc needs a \"cap\" or \"plane\" field");
}

bool disc_forms_disagree(const json& j) {
  if (!j.is_object() || !j.contains("cap") || !j.contains("plane")) return false;
  return cp1::cap_distance(cp1::disc_to_cap(cap_from_json(j.at("cap"))),
                           cp1::disc_to_cap(plane_from_json(j.at("plane")))) > kFormAgreement;
}

certify::Pairing pairing_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("pairing must list three pairs");
  certify::Pairing p{};
  for (int a = 0; a < 3; ++a) {
    if (!j[a].is_array() || j[a].size() != 2) throw InputError("each pair needs two indices");
    for (int b = 0; b < 2; ++b) {
      if (!j[a][b].is_number_integer()) throw InputError("pair indices must be integers");
      p[a][b] = j[a][b].get<int>();
    }
  }
  if (!certify::is_partition(p)) throw InputError("pairing must use each index 0..5 once");
  return p;
}

json split_to_json(const certify::SixPoints& points, const split::CertifiedSplit& s) {
  json pts = json::array();
  for (const auto& p : points) pts.push_back(point_to_json(p));
  json discs = json::array();
  for (const auto& d : s.discs) discs.push_back(disc_to_json(d));
  json pairing = json::array();
  for (const auto& pair : s.pairing) pairing.push_back({pair[0], pair[1]});
  return {{"version", kVersion}, {"points", pts},       {"pairing", pairing},
          {"discs", discs},      {"margin", s.margin},  {"transcript", s.transcript},
          {"used_oracle", s.used_oracle}};
}

json certificate_to_json(const certify::Certificate& c) {
  json discs = json::array();
  for (const auto& d : c.discs) {
    discs.push_back({{"members", {d.members[0], d.members[1]}},
                     {"cap", {{"center", vec_json(d.cap.center)},
                              {"angular_radius", d.cap.angular_radius}}},
                     {"slack", d.slack}});
  }
  return {{"version", kVersion},
          {"pass", c.pass},
          {"margin", c.margin},
          {"epsilon", c.epsilon},
          {"separations", c.separations},
          {"discs", discs},
          {"violations", c.violations}};
}

json report_to_json(const certify::FuzzReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json pts = json::array();
    for (const auto& p : f.points) pts.push_back(point_to_json(p));
    failures.push_back(
        {{"index", f.index}, {"points", pts}, {"message", f.message}, {"transcript", f.transcript}});
  }
  return {{"version", kVersion},
          {"trials", r.trials},
          {"successes", r.successes},
          {"fallback_uses", r.fallback_uses},
          {"min_margin", r.min_margin},
          {"seed", r.seed},
          {"sampler", certify::sampler_name(r.sampler)},
          {"failures", failures}};
}

}  // namespace sixsplit::cli
