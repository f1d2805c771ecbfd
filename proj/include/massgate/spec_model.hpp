#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "massgate/field_path.hpp"
#include "massgate/json.hpp"

namespace massgate {

enum class SchemaKind { Object, Array, String, Integer, Number, Boolean };

const char* to_string(SchemaKind kind);

struct SchemaProperty;

// Normalized JSON-schema tree. After parsing, all internal $refs are inlined
// and allOf compositions merged, so a SchemaNode is self-contained.
struct SchemaNode {
  SchemaKind kind = SchemaKind::String;
  std::vector<SchemaProperty> properties;  // object only, declaration order
  std::vector<SchemaNode> items;           // array only, 0 or 1 entries
  std::optional<std::string> format;
  std::vector<Json> enum_values;
  std::optional<Json> default_value;
  std::vector<Json> example_values;
  bool required = false;  // whether this node is required within its parent

  bool is_scalar() const {
    return kind != SchemaKind::Object && kind != SchemaKind::Array;
  }
  const SchemaNode* find_property(const std::string& name) const;
  const SchemaNode* item() const { return items.empty() ? nullptr : &items.front(); }

  // Resolves a FieldPath ("[]" descends into array items) to the node it
  // addresses, or nullptr.
  const SchemaNode* resolve(const FieldPath& path) const;

  bool operator==(const SchemaNode& other) const;
};

struct SchemaProperty {
  std::string name;
  SchemaNode node;

  bool operator==(const SchemaProperty& other) const = default;
};

enum class HttpMethod { Get, Post, Put, Patch, Delete, Head, Options, Trace };

const char* to_string(HttpMethod method);
std::optional<HttpMethod> parse_method(const std::string& text);

enum class ParamLocation { Path, Query, Header, Body };

const char* to_string(ParamLocation location);

struct ParamDesc {
  std::string name;  // leaf name (body parameters use the final segment)
  ParamLocation location = ParamLocation::Query;
  FieldPath path;     // single segment for path/query/header, body-relative otherwise
  SchemaNode schema;  // leaf schema
  bool required = false;

  bool operator==(const ParamDesc& other) const = default;
};

enum class StatusClass { Success2xx, ClientError4xx, ServerError5xx, Other };

const char* to_string(StatusClass cls);
StatusClass classify_status(int status);

struct ResponseDesc {
  int status = 0;  // lowest declared status of its class (0 for wildcards)
  std::optional<SchemaNode> schema;

  bool operator==(const ResponseDesc& other) const = default;
};

struct OperationDesc {
  std::string operation_id;
  std::string path;
  HttpMethod method = HttpMethod::Get;
  std::vector<ParamDesc> input_params;  // path, query, header and flattened body leaves
  std::optional<SchemaNode> request_body_schema;
  std::map<StatusClass, ResponseDesc> response_schemas;

  // Schema of the lowest declared 2xx response, or nullptr.
  const SchemaNode* success_schema() const;

  bool operator==(const OperationDesc& other) const = default;
};

enum class DocumentFormat { Json, Yaml };

struct ApiSpec {
  std::string base_url;
  std::vector<OperationDesc> operations;
  std::map<std::string, SchemaNode> components;
  Json raw_document;  // pre-inlining document, used for annotation output
  DocumentFormat format = DocumentFormat::Json;
  std::vector<std::string> warnings;

  const OperationDesc* find_operation(const std::string& operation_id) const;
};

// Structural equality over the normalized model (base_url, operations,
// components); raw document bytes and warnings are not compared.
bool structurally_equal(const ApiSpec& a, const ApiSpec& b);

enum class FormatHint { Json, Yaml, Auto };

struct ParseOptions {
  FormatHint format_hint = FormatHint::Auto;
  int max_schema_depth = 32;
};

// Parses an OpenAPI 3.x document (JSON or YAML) into the normalized model.
// Internal $ref chains are fully inlined; allOf branches merged; the first
// branch of oneOf/anyOf is taken with a warning. Throws ParseError,
// UnresolvedRef or UnsupportedVersion.
ApiSpec parse_spec(const std::string& document, const ParseOptions& options = {});

// Re-serializes the normalized model as an OpenAPI JSON document; parsing
// the result yields a structurally equal ApiSpec.
Json to_document(const ApiSpec& spec);

struct FlattenOptions {
  int max_depth = 32;
};

// Every scalar leaf reachable through objects and arrays, depth-first in
// declaration order. Arrays contribute one "[]" segment. A scalar root
// yields the single empty path. Throws RecursionLimit beyond max_depth.
std::vector<std::pair<FieldPath, SchemaNode>> flatten_fields(const SchemaNode& schema,
                                                             const FlattenOptions& options = {});

}  // namespace massgate
