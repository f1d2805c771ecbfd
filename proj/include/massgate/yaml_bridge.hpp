#pragma once

#include <string>

#include "massgate/json.hpp"

namespace massgate {

// Converts YAML text to JSON. Scalars are typed with the YAML core schema:
// null, booleans, integers, floats; everything else stays a string.
// Throws ParseError on malformed input.
Json yaml_to_json(const std::string& text);

// Emits a JSON value as YAML (block style, 2-space indent).
std::string json_to_yaml(const Json& value);

}  // namespace massgate
