#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cosserat/constitutive.hpp"
#include "cosserat/params.hpp"

namespace cosserat {

// Material JSON schema:
//   { "notation": "...", "units": "MPa_mm" | "SI", "values": {...},
//     "L_c": <mm, optional> }
// Unknown keys are rejected; +inf is encoded as the string "inf".

struct MaterialFile {
  TaggedParams params;
  std::optional<double> L_c;   // explicit gauge, when present
  bool units_explicit = false; // file carried a "units" key
};

MaterialFile material_from_json(const nlohmann::json& j);
nlohmann::json material_to_json(const TaggedParams& p);

// Parses text, reporting line/column on malformed input (ParseError).
MaterialFile parse_material_text(const std::string& text);
MaterialFile load_material_file(const std::string& path);

nlohmann::json condition_report_to_json(const ConditionReport& r);
nlohmann::json technical_constants_to_json(const TechnicalConstants& tc);

// Extended-real helpers ("inf" <-> +infinity).
nlohmann::json extended_to_json(double v);
double extended_from_json(const nlohmann::json& j, const std::string& key);

}  // namespace cosserat
