#include "massgate/spec_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "massgate/errors.hpp"
#include "massgate/yaml_bridge.hpp"

namespace massgate {

const char* to_string(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::Object: return "object";
    case SchemaKind::Array: return "array";
    case SchemaKind::String: return "string";
    case SchemaKind::Integer: return "integer";
    case SchemaKind::Number: return "number";
    case SchemaKind::Boolean: return "boolean";
  }
  return "string";
}

const char* to_string(HttpMethod method) {
  switch (method) {
    case HttpMethod::Get: return "GET";
    case HttpMethod::Post: return "POST";
    case HttpMethod::Put: return "PUT";
    case HttpMethod::Patch: return "PATCH";
    case HttpMethod::Delete: return "DELETE";
    case HttpMethod::Head: return "HEAD";
    case HttpMethod::Options: return "OPTIONS";
    case HttpMethod::Trace: return "TRACE";
  }
  return "GET";
}

std::optional<HttpMethod> parse_method(const std::string& text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "get") return HttpMethod::Get;
  if (lower == "post") return HttpMethod::Post;
  if (lower == "put") return HttpMethod::Put;
  if (lower == "patch") return HttpMethod::Patch;
  if (lower == "delete") return HttpMethod::Delete;
  if (lower == "head") return HttpMethod::Head;
  if (lower == "options") return HttpMethod::Options;
  if (lower == "trace") return HttpMethod::Trace;
  return std::nullopt;
}

const char* to_string(ParamLocation location) {
  switch (location) {
    case ParamLocation::Path: return "path";
    case ParamLocation::Query: return "query";
    case ParamLocation::Header: return "header";
    case ParamLocation::Body: return "body";
  }
  return "query";
}

const char* to_string(StatusClass cls) {
  switch (cls) {
    case StatusClass::Success2xx: return "2xx";
    case StatusClass::ClientError4xx: return "4xx";
    case StatusClass::ServerError5xx: return "5xx";
    case StatusClass::Other: return "other";
  }
  return "other";
}

StatusClass classify_status(int status) {
  if (status >= 200 && status <= 299) return StatusClass::Success2xx;
  if (status >= 400 && status <= 499) return StatusClass::ClientError4xx;
  if (status >= 500 && status <= 599) return StatusClass::ServerError5xx;
  return StatusClass::Other;
}

const SchemaNode* SchemaNode::find_property(const std::string& name) const {
  for (const auto& prop : properties) {
    if (prop.name == name) return &prop.node;
  }
  return nullptr;
}

const SchemaNode* SchemaNode::resolve(const FieldPath& path) const {
  const SchemaNode* node = this;
  for (const auto& segment : path.segments()) {
    if (segment == FieldPath::kArraySegment) {
      node = node->item();
    } else {
      node = node->find_property(segment);
    }
    if (node == nullptr) return nullptr;
  }
  return node;
}

bool SchemaNode::operator==(const SchemaNode& other) const {
  return kind == other.kind && properties == other.properties && items == other.items &&
         format == other.format && enum_values == other.enum_values &&
         default_value == other.default_value && example_values == other.example_values &&
         required == other.required;
}

const SchemaNode* OperationDesc::success_schema() const {
  auto it = response_schemas.find(StatusClass::Success2xx);
  if (it == response_schemas.end() || !it->second.schema.has_value()) return nullptr;
  return &*it->second.schema;
}

const OperationDesc* ApiSpec::find_operation(const std::string& operation_id) const {
  for (const auto& op : operations) {
    if (op.operation_id == operation_id) return &op;
  }
  return nullptr;
}

bool structurally_equal(const ApiSpec& a, const ApiSpec& b) {
  return a.base_url == b.base_url && a.operations == b.operations && a.components == b.components;
}

namespace {

struct Parser {
  Json root;
  int max_depth;
  std::vector<std::string>* warnings;

  void warn(const std::string& message) {
    if (std::find(warnings->begin(), warnings->end(), message) == warnings->end()) {
      warnings->push_back(message);
    }
  }

  static std::string unescape_pointer(const std::string& token) {
    std::string out;
    for (size_t i = 0; i < token.size(); ++i) {
      if (token[i] == '~' && i + 1 < token.size()) {
        if (token[i + 1] == '0') { out += '~'; ++i; continue; }
        if (token[i + 1] == '1') { out += '/'; ++i; continue; }
      }
      out += token[i];
    }
    return out;
  }

  const Json* lookup_ref(const std::string& ref) const {
    if (ref.size() < 2 || ref[0] != '#' || ref[1] != '/') return nullptr;
    const Json* node = &root;
    std::istringstream stream(ref.substr(2));
    std::string token;
    while (std::getline(stream, token, '/')) {
      std::string key = unescape_pointer(token);
      if (!node->is_object() || !node->contains(key)) return nullptr;
      node = &(*node)[key];
    }
    return node;
  }

  // Deep-copies `node` with every internal $ref replaced by its target.
  // Cyclic reference chains are cut at max_depth hops: the offending subtree
  // becomes an empty object and a warning is recorded.
  Json inline_refs(const Json& node, int ref_depth, int struct_depth = 0) {
    if (struct_depth > 512) {
      throw ParseError("document nesting too deep");
    }
    if (node.is_object()) {
      if (node.contains("$ref")) {
        const Json& ref = node["$ref"];
        if (!ref.is_string()) {
          throw UnresolvedRef("$ref value is not a string");
        }
        std::string target = ref.get<std::string>();
        if (target.empty() || target[0] != '#') {
          throw UnresolvedRef("remote reference not supported: " + target);
        }
        if (ref_depth >= max_depth) {
          warn("cyclic schema reference truncated: " + target);
          return Json::object();
        }
        const Json* resolved = lookup_ref(target);
        if (resolved == nullptr) {
          throw UnresolvedRef("dangling reference: " + target);
        }
        return inline_refs(*resolved, ref_depth + 1, struct_depth);
      }
      Json out = Json::object();
      for (const auto& [key, value] : node.items()) {
        out[key] = inline_refs(value, ref_depth, struct_depth + 1);
      }
      return out;
    }
    if (node.is_array()) {
      Json out = Json::array();
      for (const auto& value : node) {
        out.push_back(inline_refs(value, ref_depth, struct_depth + 1));
      }
      return out;
    }
    return node;
  }

  // Merges allOf branches at the JSON level: properties union (later
  // branches win per-name), required lists union, first branch supplies the
  // remaining keywords.
  Json merge_all_of(const Json& schema) {
    Json merged = Json::object();
    std::vector<Json> branches;
    for (const auto& branch : schema["allOf"]) {
      branches.push_back(branch);
    }
    for (const auto& [key, value] : schema.items()) {
      if (key != "allOf") merged[key] = value;
    }
    Json properties = Json::object();
    std::set<std::string> required;
    for (const auto& branch : branches) {
      if (!branch.is_object()) continue;
      for (const auto& [key, value] : branch.items()) {
        if (key == "properties") {
          for (const auto& [name, prop] : value.items()) {
            properties[name] = prop;
          }
        } else if (key == "required" && value.is_array()) {
          for (const auto& name : value) {
            if (name.is_string()) required.insert(name.get<std::string>());
          }
        } else if (!merged.contains(key)) {
          merged[key] = value;
        }
      }
    }
    if (merged.contains("required") && merged["required"].is_array()) {
      for (const auto& name : merged["required"]) {
        if (name.is_string()) required.insert(name.get<std::string>());
      }
    }
    if (!properties.empty()) {
      if (merged.contains("properties")) {
        for (const auto& [name, prop] : properties.items()) {
          merged["properties"][name] = prop;
        }
      } else {
        merged["properties"] = properties;
      }
    }
    if (!required.empty()) {
      Json req = Json::array();
      for (const auto& name : required) req.push_back(name);
      merged["required"] = req;
    }
    return merged;
  }

  SchemaKind infer_kind(const Json& schema) {
    if (schema.contains("type") && schema["type"].is_string()) {
      std::string type = schema["type"].get<std::string>();
      if (type == "object") return SchemaKind::Object;
      if (type == "array") return SchemaKind::Array;
      if (type == "string") return SchemaKind::String;
      if (type == "integer") return SchemaKind::Integer;
      if (type == "number") return SchemaKind::Number;
      if (type == "boolean") return SchemaKind::Boolean;
      warn("unknown schema type '" + type + "' treated as string");
      return SchemaKind::String;
    }
    if (schema.contains("properties") || schema.contains("additionalProperties")) {
      return SchemaKind::Object;
    }
    if (schema.contains("items")) return SchemaKind::Array;
    if (schema.contains("enum") && schema["enum"].is_array() && !schema["enum"].empty()) {
      const Json& first = schema["enum"][0];
      if (first.is_boolean()) return SchemaKind::Boolean;
      if (first.is_number_integer()) return SchemaKind::Integer;
      if (first.is_number()) return SchemaKind::Number;
    }
    return SchemaKind::String;
  }

  SchemaNode build_schema(const Json& input, int depth) {
    if (depth > max_depth) {
      warn("schema nesting exceeds depth limit; subtree truncated");
      return SchemaNode{};
    }
    if (!input.is_object()) {
      return SchemaNode{};
    }
    Json schema = input;
    if (schema.contains("allOf") && schema["allOf"].is_array()) {
      schema = merge_all_of(schema);
    }
    for (const char* keyword : {"oneOf", "anyOf"}) {
      if (schema.contains(keyword) && schema[keyword].is_array() && !schema[keyword].empty()) {
        warn(std::string(keyword) + " composite encountered; first branch used");
        Json branch = schema[keyword][0];
        schema.erase(keyword);
        for (const auto& [key, value] : branch.items()) {
          schema[key] = value;
        }
      }
    }

    SchemaNode node;
    node.kind = infer_kind(schema);
    if (schema.contains("format") && schema["format"].is_string()) {
      node.format = schema["format"].get<std::string>();
    }
    if (schema.contains("enum") && schema["enum"].is_array()) {
      for (const auto& value : schema["enum"]) {
        node.enum_values.push_back(value);
      }
    }
    if (schema.contains("default")) {
      node.default_value = schema["default"];
    }
    if (schema.contains("example")) {
      node.example_values.push_back(schema["example"]);
    }
    if (schema.contains("examples") && schema["examples"].is_array()) {
      for (const auto& value : schema["examples"]) {
        node.example_values.push_back(value);
      }
    }

    if (node.kind == SchemaKind::Object) {
      std::set<std::string> required_names;
      if (schema.contains("required") && schema["required"].is_array()) {
        for (const auto& name : schema["required"]) {
          if (name.is_string()) required_names.insert(name.get<std::string>());
        }
      }
      if (schema.contains("properties") && schema["properties"].is_object()) {
        for (const auto& [name, prop] : schema["properties"].items()) {
          SchemaProperty property;
          property.name = name;
          property.node = build_schema(prop, depth + 1);
          property.node.required = required_names.count(name) > 0;
          node.properties.push_back(std::move(property));
        }
      }
    } else if (node.kind == SchemaKind::Array) {
      if (schema.contains("items") && schema["items"].is_object()) {
        node.items.push_back(build_schema(schema["items"], depth + 1));
      } else {
        warn("array schema without items; string items assumed");
        node.items.push_back(SchemaNode{});
      }
      node.items.front().required = true;
    }
    return node;
  }

  // picks the JSON media type if present, else the first declared
  const Json* select_content_schema(const Json& owner) {
    if (!owner.is_object() || !owner.contains("content") || !owner["content"].is_object()) {
      return nullptr;
    }
    const Json& content = owner["content"];
    const Json* chosen = nullptr;
    for (const auto& [media, body] : content.items()) {
      if (media.find("json") != std::string::npos) {
        chosen = &body;
        break;
      }
      if (chosen == nullptr) chosen = &body;
    }
    if (chosen == nullptr || !chosen->is_object() || !chosen->contains("schema")) {
      return nullptr;
    }
    return &(*chosen)["schema"];
  }

  void add_param(OperationDesc& op, ParamDesc param) {
    for (const auto& existing : op.input_params) {
      if (existing.name == param.name && existing.location == param.location) {
        warn("duplicate parameter '" + param.name + "' in " + op.operation_id + " ignored");
        return;
      }
    }
    op.input_params.push_back(std::move(param));
  }

  void parse_parameter(OperationDesc& op, const Json& param_json) {
    if (!param_json.is_object() || !param_json.contains("name") || !param_json["name"].is_string()) {
      warn("parameter without a name ignored in " + op.operation_id);
      return;
    }
    ParamDesc param;
    param.name = param_json["name"].get<std::string>();
    std::string in = param_json.value("in", std::string("query"));
    if (in == "path") {
      param.location = ParamLocation::Path;
    } else if (in == "query") {
      param.location = ParamLocation::Query;
    } else if (in == "header") {
      param.location = ParamLocation::Header;
    } else if (in == "cookie") {
      warn("cookie parameter '" + param.name + "' treated as header");
      param.location = ParamLocation::Header;
    } else {
      warn("unknown parameter location '" + in + "' treated as query");
      param.location = ParamLocation::Query;
    }
    param.path = FieldPath{{param.name}};
    if (param_json.contains("schema")) {
      param.schema = build_schema(param_json["schema"], 0);
    }
    param.required = param_json.value("required", param.location == ParamLocation::Path);
    param.schema.required = param.required;
    add_param(op, std::move(param));
  }

  void flatten_body_params(OperationDesc& op, const SchemaNode& schema, bool body_required) {
    for (auto& [path, leaf] : flatten_fields(schema, FlattenOptions{max_depth})) {
      if (path.empty()) {
        continue;  // scalar body roots carry no named parameters
      }
      ParamDesc param;
      param.name = path.leaf_name();
      if (param.name == FieldPath::kArraySegment) {
        continue;  // array of scalars: the element itself is unnamed
      }
      param.location = ParamLocation::Body;
      param.path = path;
      param.schema = leaf;
      bool chain_required = body_required;
      const SchemaNode* node = &schema;
      for (const auto& segment : path.segments()) {
        if (segment == FieldPath::kArraySegment) {
          node = node->item();
        } else {
          node = node->find_property(segment);
        }
        if (node == nullptr) break;
        chain_required = chain_required && node->required;
      }
      param.required = chain_required;
      add_param(op, std::move(param));
    }
  }

  OperationDesc parse_operation(const std::string& path, HttpMethod method, const Json& op_json,
                                const Json& shared_params) {
    OperationDesc op;
    op.path = path;
    op.method = method;
    if (op_json.contains("operationId") && op_json["operationId"].is_string()) {
      op.operation_id = op_json["operationId"].get<std::string>();
    } else {
      op.operation_id = std::string(to_string(method)) + " " + path;
    }

    if (shared_params.is_array()) {
      for (const auto& param : shared_params) {
        parse_parameter(op, param);
      }
    }
    if (op_json.contains("parameters") && op_json["parameters"].is_array()) {
      for (const auto& param : op_json["parameters"]) {
        parse_parameter(op, param);
      }
    }

    if (op_json.contains("requestBody") && op_json["requestBody"].is_object()) {
      const Json& body = op_json["requestBody"];
      bool body_required = body.value("required", false);
      if (const Json* schema_json = select_content_schema(body)) {
        SchemaNode schema = build_schema(*schema_json, 0);
        schema.required = body_required;
        flatten_body_params(op, schema, body_required);
        op.request_body_schema = std::move(schema);
      }
    }

    if (op_json.contains("responses") && op_json["responses"].is_object()) {
      for (const auto& [status_key, response] : op_json["responses"].items()) {
        int status = 0;
        StatusClass cls = StatusClass::Other;
        if (status_key == "default") {
          cls = StatusClass::Other;
        } else if (status_key.size() == 3 && std::isdigit(static_cast<unsigned char>(status_key[0]))) {
          if (std::isdigit(static_cast<unsigned char>(status_key[1])) &&
              std::isdigit(static_cast<unsigned char>(status_key[2]))) {
            status = std::stoi(status_key);
            cls = classify_status(status);
          } else {
            // wildcard form such as 2XX
            cls = classify_status((status_key[0] - '0') * 100);
          }
        } else {
          warn("unrecognized response status '" + status_key + "' in " + op.operation_id);
          continue;
        }
        ResponseDesc desc;
        desc.status = status;
        if (const Json* schema_json = select_content_schema(response)) {
          desc.schema = build_schema(*schema_json, 0);
        }
        auto it = op.response_schemas.find(cls);
        if (it == op.response_schemas.end()) {
          op.response_schemas[cls] = std::move(desc);
        } else {
          // keep the lowest declared status; wildcards (0) lose to numerics
          bool replace = it->second.status == 0 ? desc.status != 0
                                                : desc.status != 0 && desc.status < it->second.status;
          if (replace) it->second = std::move(desc);
        }
      }
    }
    return op;
  }

  ApiSpec parse() {
    if (!root.is_object()) {
      throw ParseError("OpenAPI document root must be an object");
    }
    if (root.contains("swagger")) {
      throw UnsupportedVersion("Swagger 2.0 documents are not supported; convert to OpenAPI 3.x");
    }
    if (!root.contains("openapi") || !root["openapi"].is_string()) {
      throw UnsupportedVersion("missing 'openapi' version field");
    }
    std::string version = root["openapi"].get<std::string>();
    if (version.rfind("3.", 0) != 0) {
      throw UnsupportedVersion("unsupported OpenAPI version: " + version);
    }
    if (!root.contains("paths") || !root["paths"].is_object()) {
      throw ParseError("missing 'paths' object");
    }

    ApiSpec spec;
    spec.raw_document = root;

    if (root.contains("servers") && root["servers"].is_array() && !root["servers"].empty()) {
      const Json& server = root["servers"][0];
      if (server.is_object() && server.contains("url") && server["url"].is_string()) {
        spec.base_url = server["url"].get<std::string>();
      }
    }

    Json inlined = inline_refs(root, 0);

    for (const auto& [path, path_item] : inlined["paths"].items()) {
      if (path.rfind("x-", 0) == 0) continue;  // extension keys under paths
      if (!path_item.is_object()) continue;
      if (path.empty() || path[0] != '/') {
        throw ParseError("path does not begin with '/': " + path);
      }
      Json shared_params = path_item.contains("parameters") ? path_item["parameters"] : Json();
      for (const auto& [key, op_json] : path_item.items()) {
        auto method = parse_method(key);
        if (!method.has_value() || !op_json.is_object()) continue;
        spec.operations.push_back(parse_operation(path, *method, op_json, shared_params));
      }
    }

    if (inlined.contains("components") && inlined["components"].is_object() &&
        inlined["components"].contains("schemas") && inlined["components"]["schemas"].is_object()) {
      for (const auto& [name, schema] : inlined["components"]["schemas"].items()) {
        spec.components[name] = build_schema(schema, 0);
      }
    }
    return spec;
  }
};

void flatten_into(const SchemaNode& node, FieldPath path, int depth, int max_depth,
                  std::vector<std::pair<FieldPath, SchemaNode>>& out) {
  if (depth > max_depth) {
    throw RecursionLimit("schema nesting exceeds flatten depth limit");
  }
  switch (node.kind) {
    case SchemaKind::Object:
      for (const auto& prop : node.properties) {
        flatten_into(prop.node, path.appended(prop.name), depth + 1, max_depth, out);
      }
      break;
    case SchemaKind::Array:
      if (const SchemaNode* item = node.item()) {
        flatten_into(*item, path.appended(FieldPath::kArraySegment), depth + 1, max_depth, out);
      }
      break;
    default:
      out.emplace_back(std::move(path), node);
      break;
  }
}

Json schema_to_json(const SchemaNode& node) {
  Json out = Json::object();
  out["type"] = to_string(node.kind);
  if (node.format.has_value()) out["format"] = *node.format;
  if (!node.enum_values.empty()) {
    Json arr = Json::array();
    for (const auto& v : node.enum_values) arr.push_back(v);
    out["enum"] = arr;
  }
  if (node.default_value.has_value()) out["default"] = *node.default_value;
  if (node.example_values.size() == 1) {
    out["example"] = node.example_values.front();
  } else if (node.example_values.size() > 1) {
    Json arr = Json::array();
    for (const auto& v : node.example_values) arr.push_back(v);
    out["examples"] = arr;
  }
  if (node.kind == SchemaKind::Object) {
    Json props = Json::object();
    Json required = Json::array();
    for (const auto& prop : node.properties) {
      props[prop.name] = schema_to_json(prop.node);
      if (prop.node.required) required.push_back(prop.name);
    }
    out["properties"] = props;
    if (!required.empty()) out["required"] = required;
  } else if (node.kind == SchemaKind::Array && node.item() != nullptr) {
    out["items"] = schema_to_json(*node.item());
  }
  return out;
}

std::string status_key_for(StatusClass cls, int status) {
  if (status > 0) return std::to_string(status);
  switch (cls) {
    case StatusClass::Success2xx: return "2XX";
    case StatusClass::ClientError4xx: return "4XX";
    case StatusClass::ServerError5xx: return "5XX";
    case StatusClass::Other: return "default";
  }
  return "default";
}

}  // namespace

ApiSpec parse_spec(const std::string& document, const ParseOptions& options) {
  Json root;
  DocumentFormat format = DocumentFormat::Json;
  auto try_json = [&]() -> bool {
    auto parsed = Json::parse(document, nullptr, false);
    if (parsed.is_discarded()) return false;
    root = std::move(parsed);
    return true;
  };
  switch (options.format_hint) {
    case FormatHint::Json:
      if (!try_json()) {
        throw ParseError("malformed JSON document");
      }
      break;
    case FormatHint::Yaml:
      root = yaml_to_json(document);
      format = DocumentFormat::Yaml;
      break;
    case FormatHint::Auto:
      if (!try_json()) {
        root = yaml_to_json(document);
        format = DocumentFormat::Yaml;
      }
      break;
  }

  std::vector<std::string> warnings;
  Parser parser{std::move(root), options.max_schema_depth, &warnings};
  ApiSpec parsed;
  try {
    parsed = parser.parse();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed OpenAPI structure: ") + e.what());
  }
  parsed.warnings = std::move(warnings);
  parsed.format = format;
  return parsed;
}

Json to_document(const ApiSpec& spec) {
  Json doc = Json::object();
  doc["openapi"] = "3.0.3";
  doc["info"] = Json{{"title", "api"}, {"version", "0.0.0"}};
  if (!spec.base_url.empty()) {
    doc["servers"] = Json::array({Json{{"url", spec.base_url}}});
  }
  Json paths = Json::object();
  for (const auto& op : spec.operations) {
    if (!paths.contains(op.path)) {
      paths[op.path] = Json::object();
    }
    Json op_json = Json::object();
    op_json["operationId"] = op.operation_id;
    Json params = Json::array();
    for (const auto& param : op.input_params) {
      if (param.location == ParamLocation::Body) continue;
      Json p = Json::object();
      p["name"] = param.name;
      p["in"] = to_string(param.location);
      p["required"] = param.required;
      p["schema"] = schema_to_json(param.schema);
      params.push_back(p);
    }
    if (!params.empty()) op_json["parameters"] = params;
    if (op.request_body_schema.has_value()) {
      Json body = Json::object();
      body["required"] = op.request_body_schema->required;
      body["content"] = Json{{"application/json", Json{{"schema", schema_to_json(*op.request_body_schema)}}}};
      op_json["requestBody"] = body;
    }
    Json responses = Json::object();
    for (const auto& [cls, response] : op.response_schemas) {
      Json r = Json::object();
      r["description"] = "";
      if (response.schema.has_value()) {
        r["content"] = Json{{"application/json", Json{{"schema", schema_to_json(*response.schema)}}}};
      }
      responses[status_key_for(cls, response.status)] = r;
    }
    op_json["responses"] = responses;
    std::string method_key;
    for (const char* c = to_string(op.method); *c != '\0'; ++c) {
      method_key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(*c))));
    }
    paths[op.path][method_key] = op_json;
  }
  doc["paths"] = paths;
  if (!spec.components.empty()) {
    Json schemas = Json::object();
    for (const auto& [name, schema] : spec.components) {
      schemas[name] = schema_to_json(schema);
    }
    doc["components"] = Json{{"schemas", schemas}};
  }
  return doc;
}

std::vector<std::pair<FieldPath, SchemaNode>> flatten_fields(const SchemaNode& schema,
                                                             const FlattenOptions& options) {
  std::vector<std::pair<FieldPath, SchemaNode>> out;
  flatten_into(schema, FieldPath{}, 0, options.max_depth, out);
  return out;
}

}  // namespace massgate
