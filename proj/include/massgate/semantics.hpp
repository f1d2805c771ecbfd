#pragma once

#include <optional>
#include <string>
#include <vector>

#include "massgate/field_path.hpp"
#include "massgate/spec_model.hpp"

namespace massgate {

enum class CrudSemantics { Create, Read, ReadMulti, Update, Delete, None };

// lower-case annotation value: create|read|read-multi|update|delete|none
const char* to_string(CrudSemantics semantics);
std::optional<CrudSemantics> parse_crud_semantics(const std::string& text);

struct CrudAnnotation {
  std::string operation_id;
  CrudSemantics semantics = CrudSemantics::None;
  std::string resource_type;  // empty when semantics == None
  std::optional<FieldPath> resource_id_input;
  std::optional<FieldPath> resource_id_output;

  bool operator==(const CrudAnnotation& other) const = default;
};

// HTTP-method convention: POST creates, GET reads (object response) or
// read-multis (array response), PUT/PATCH update, DELETE deletes. GET
// without a 2xx schema handles no resource. HEAD/OPTIONS/TRACE are None.
CrudSemantics infer_crud(const OperationDesc& op);

enum class SchemaSide { Input, Output };

// Picks the resource-id field of one side: leaf names ending in "id" or
// "name" (case-insensitive), ties broken by least nesting (array segments
// ignored), then "id" over "name", then declaration order.
std::optional<FieldPath> detect_resource_id(const OperationDesc& op, SchemaSide side);

// Emits the original document with x-crudOperationSemantics,
// x-crudResourceType and x-crudResourceIdentifier set on each annotated
// operation, serialized in the input format. Idempotent. Throws
// UnknownOperation for annotations that match no operation.
std::string annotate_spec(const ApiSpec& spec, const std::vector<CrudAnnotation>& annotations);

// Reads x-crud* extension keys back out of the document. Operations carrying
// any such key are manual annotations and take precedence over inference.
// Throws InvalidAnnotationValue on unknown semantics strings.
std::vector<CrudAnnotation> read_annotations(const ApiSpec& spec);

}  // namespace massgate
