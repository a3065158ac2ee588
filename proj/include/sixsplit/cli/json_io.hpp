#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "sixsplit/certify/fuzz.hpp"
#include "sixsplit/certify/verify.hpp"
#include "sixsplit/split/pipeline.hpp"

namespace sixsplit::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

/// Malformed or semantically invalid input document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses text as JSON, throwing InputError on syntax errors.
json parse_document(const std::string& text);

json point_to_json(const cp1::SpherePoint& p);
cp1::SpherePoint point_from_json(const json& j);

/// Exactly six distinct entries under "points".
certify::SixPoints points_from_document(const json& doc);

/// "tolerance": {"epsilon": x} if present.
std::optional<double> epsilon_from_document(const json& doc);

/// Both forms of a disc: {"cap": {...}, "plane": {...}}. Throws std::logic_error
/// if the plane form does not reproduce the cap.
json disc_to_json(const cp1::GeneralizedDisc& d);

/// Reads the cap form, or the plane form when no cap is given.
cp1::GeneralizedDisc disc_from_json(const json& j);

/// True when a document disc carries both forms and they disagree.
bool disc_forms_disagree(const json& j);

certify::Pairing pairing_from_json(const json& j);

json split_to_json(const certify::SixPoints& points, const split::CertifiedSplit& s);
json certificate_to_json(const certify::Certificate& c);
json report_to_json(const certify::FuzzReport& r);

}  // namespace sixsplit::cli
