#pragma once

#include <string>

#include <json.hpp>

#include "plint/closed_form.hpp"

namespace plint {

/// {"terms":[{"coeff":"-3/7","factors":[{"kind":"Zeta","args":[2],"exp":1}]}]}
/// with fixed key order.
nlohmann::ordered_json to_json(const ClosedForm& f);
std::string serialize(const ClosedForm& f);

/// Inverse of to_json; throws ParseError on malformed input.
ClosedForm closed_form_from_json(const nlohmann::ordered_json& j);
ClosedForm parse_closed_form(const std::string& text);

}  // namespace plint
