#pragma once

#include <nlohmann/json.hpp>

namespace massgate {

// Order-preserving JSON is used throughout: object key order mirrors the
// source document, which keeps parsing, annotation output and request
// bodies deterministic.
using Json = nlohmann::ordered_json;

}  // namespace massgate
