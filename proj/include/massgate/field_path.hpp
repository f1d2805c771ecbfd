#pragma once

#include <string>
#include <vector>

namespace massgate {

// Addresses a leaf inside a (possibly nested) schema or JSON value. Object
// traversal uses the property name, array traversal the reserved "[]"
// segment. The empty path addresses a scalar root.
class FieldPath {
 public:
  static constexpr const char* kArraySegment = "[]";

  FieldPath() = default;
  explicit FieldPath(std::vector<std::string> segments);

  // Parses the canonical "/"-joined form, e.g. "[]/admin" or "order/id".
  static FieldPath parse(const std::string& text);

  const std::vector<std::string>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  size_t size() const { return segments_.size(); }

  FieldPath appended(const std::string& segment) const;

  // Path with "[]" segments removed; used for nesting-depth comparison and
  // for grafting read-response paths into request bodies.
  FieldPath without_arrays() const;

  // Final segment, or "" for the root path.
  const std::string& leaf_name() const;

  // Canonical "/"-joined rendering ("" for the root path).
  std::string to_string() const;

  bool operator==(const FieldPath& other) const = default;
  bool operator<(const FieldPath& other) const { return segments_ < other.segments_; }

 private:
  std::vector<std::string> segments_;
};

}  // namespace massgate
