#include "massgate/semantics.hpp"

#include <algorithm>
#include <cctype>

#include "massgate/errors.hpp"
#include "massgate/yaml_bridge.hpp"

namespace massgate {

namespace {

constexpr const char* kSemanticsKey = "x-crudOperationSemantics";
constexpr const char* kResourceTypeKey = "x-crudResourceType";
constexpr const char* kResourceIdKey = "x-crudResourceIdentifier";

std::string to_lower(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

enum class IdSuffix { Id, Name };

struct IdCandidate {
  FieldPath path;
  size_t depth;
  IdSuffix suffix;
  size_t index;
};

bool better(const IdCandidate& a, const IdCandidate& b) {
  if (a.depth != b.depth) return a.depth < b.depth;
  if (a.suffix != b.suffix) return a.suffix == IdSuffix::Id;
  return a.index < b.index;
}

std::string lower_method(HttpMethod method) {
  return to_lower(to_string(method));
}

// input-side leaves: every declared parameter, body fields as leaf paths
std::vector<FieldPath> input_leaves(const OperationDesc& op) {
  std::vector<FieldPath> out;
  out.reserve(op.input_params.size());
  for (const auto& param : op.input_params) {
    out.push_back(param.path);
  }
  return out;
}

std::vector<FieldPath> output_leaves(const OperationDesc& op) {
  std::vector<FieldPath> out;
  if (const SchemaNode* schema = op.success_schema()) {
    for (auto& [path, leaf] : flatten_fields(*schema)) {
      (void)leaf;
      out.push_back(path);
    }
  }
  return out;
}

bool side_has_leaf(const OperationDesc& op, SchemaSide side, const FieldPath& path) {
  auto leaves = side == SchemaSide::Input ? input_leaves(op) : output_leaves(op);
  return std::find(leaves.begin(), leaves.end(), path) != leaves.end();
}

}  // namespace

const char* to_string(CrudSemantics semantics) {
  switch (semantics) {
    case CrudSemantics::Create: return "create";
    case CrudSemantics::Read: return "read";
    case CrudSemantics::ReadMulti: return "read-multi";
    case CrudSemantics::Update: return "update";
    case CrudSemantics::Delete: return "delete";
    case CrudSemantics::None: return "none";
  }
  return "none";
}

std::optional<CrudSemantics> parse_crud_semantics(const std::string& text) {
  std::string lower = to_lower(text);
  if (lower == "create") return CrudSemantics::Create;
  if (lower == "read") return CrudSemantics::Read;
  if (lower == "read-multi") return CrudSemantics::ReadMulti;
  if (lower == "update") return CrudSemantics::Update;
  if (lower == "delete") return CrudSemantics::Delete;
  if (lower == "none") return CrudSemantics::None;
  return std::nullopt;
}

CrudSemantics infer_crud(const OperationDesc& op) {
  switch (op.method) {
    case HttpMethod::Post:
      return CrudSemantics::Create;
    case HttpMethod::Put:
    case HttpMethod::Patch:
      return CrudSemantics::Update;
    case HttpMethod::Delete:
      return CrudSemantics::Delete;
    case HttpMethod::Get: {
      const SchemaNode* schema = op.success_schema();
      if (schema == nullptr) return CrudSemantics::None;
      if (schema->kind == SchemaKind::Array) return CrudSemantics::ReadMulti;
      // objects and degenerate scalar responses both read a single resource
      return CrudSemantics::Read;
    }
    case HttpMethod::Head:
    case HttpMethod::Options:
    case HttpMethod::Trace:
      return CrudSemantics::None;
  }
  return CrudSemantics::None;
}

std::optional<FieldPath> detect_resource_id(const OperationDesc& op, SchemaSide side) {
  auto leaves = side == SchemaSide::Input ? input_leaves(op) : output_leaves(op);
  std::optional<IdCandidate> best;
  for (size_t i = 0; i < leaves.size(); ++i) {
    const FieldPath& path = leaves[i];
    std::string leaf = to_lower(path.leaf_name());
    IdSuffix suffix;
    if (ends_with(leaf, "id")) {
      suffix = IdSuffix::Id;
    } else if (ends_with(leaf, "name")) {
      suffix = IdSuffix::Name;
    } else {
      continue;
    }
    IdCandidate candidate{path, path.without_arrays().size(), suffix, i};
    if (!best.has_value() || better(candidate, *best)) {
      best = std::move(candidate);
    }
  }
  if (!best.has_value()) return std::nullopt;
  return best->path;
}

std::string annotate_spec(const ApiSpec& spec, const std::vector<CrudAnnotation>& annotations) {
  Json doc = spec.raw_document;
  for (const auto& annotation : annotations) {
    const OperationDesc* op = spec.find_operation(annotation.operation_id);
    if (op == nullptr) {
      throw UnknownOperation("annotation references unknown operation: " + annotation.operation_id);
    }
    std::string method_key = lower_method(op->method);
    if (!doc.contains("paths") || !doc["paths"].contains(op->path) ||
        !doc["paths"][op->path].contains(method_key)) {
      throw UnknownOperation("operation not present in document: " + annotation.operation_id);
    }
    Json& op_node = doc["paths"][op->path][method_key];
    op_node[kSemanticsKey] = to_string(annotation.semantics);
    op_node[kResourceTypeKey] = annotation.resource_type;
    const auto& in = annotation.resource_id_input;
    const auto& out = annotation.resource_id_output;
    if (in.has_value() && out.has_value() && *in == *out) {
      op_node[kResourceIdKey] = in->to_string();
    } else if (in.has_value() || out.has_value()) {
      Json id = Json::object();
      if (in.has_value()) id["input"] = in->to_string();
      if (out.has_value()) id["output"] = out->to_string();
      op_node[kResourceIdKey] = id;
    } else {
      op_node.erase(kResourceIdKey);
    }
  }
  if (spec.format == DocumentFormat::Yaml) {
    return json_to_yaml(doc);
  }
  return doc.dump(2) + "\n";
}

std::vector<CrudAnnotation> read_annotations(const ApiSpec& spec) {
  std::vector<CrudAnnotation> result;
  if (!spec.raw_document.contains("paths")) return result;
  for (const auto& [path, path_item] : spec.raw_document["paths"].items()) {
    if (!path_item.is_object()) continue;
    for (const auto& [key, op_node] : path_item.items()) {
      auto method = parse_method(key);
      if (!method.has_value() || !op_node.is_object()) continue;
      bool has_crud_key = false;
      for (const auto& [op_key, value] : op_node.items()) {
        (void)value;
        if (op_key.rfind("x-crud", 0) == 0) {
          has_crud_key = true;
          break;
        }
      }
      if (!has_crud_key) continue;

      CrudAnnotation annotation;
      if (op_node.contains("operationId") && op_node["operationId"].is_string()) {
        annotation.operation_id = op_node["operationId"].get<std::string>();
      } else {
        annotation.operation_id = std::string(to_string(*method)) + " " + path;
      }
      if (!op_node.contains(kSemanticsKey) || !op_node[kSemanticsKey].is_string()) {
        throw InvalidAnnotationValue("operation " + annotation.operation_id + " carries x-crud* keys but no " +
                                     kSemanticsKey);
      }
      std::string semantics_text = op_node[kSemanticsKey].get<std::string>();
      auto semantics = parse_crud_semantics(semantics_text);
      if (!semantics.has_value()) {
        throw InvalidAnnotationValue("unknown CRUD semantics '" + semantics_text + "' on " +
                                     annotation.operation_id);
      }
      annotation.semantics = *semantics;
      if (op_node.contains(kResourceTypeKey) && op_node[kResourceTypeKey].is_string()) {
        annotation.resource_type = op_node[kResourceTypeKey].get<std::string>();
      }
      if (annotation.semantics == CrudSemantics::None) {
        annotation.resource_type.clear();
      }

      const OperationDesc* op = spec.find_operation(annotation.operation_id);
      if (op != nullptr && op_node.contains(kResourceIdKey)) {
        const Json& id = op_node[kResourceIdKey];
        // Paths that do not address an existing leaf of their side are
        // dropped; manual annotations may be imprecise.
        if (id.is_string()) {
          FieldPath p = FieldPath::parse(id.get<std::string>());
          if (side_has_leaf(*op, SchemaSide::Input, p)) annotation.resource_id_input = p;
          if (side_has_leaf(*op, SchemaSide::Output, p)) annotation.resource_id_output = p;
        } else if (id.is_object()) {
          if (id.contains("input") && id["input"].is_string()) {
            FieldPath p = FieldPath::parse(id["input"].get<std::string>());
            if (side_has_leaf(*op, SchemaSide::Input, p)) annotation.resource_id_input = p;
          }
          if (id.contains("output") && id["output"].is_string()) {
            FieldPath p = FieldPath::parse(id["output"].get<std::string>());
            if (side_has_leaf(*op, SchemaSide::Output, p)) annotation.resource_id_output = p;
          }
        }
      }
      result.push_back(std::move(annotation));
    }
  }
  return result;
}

}  // namespace massgate
