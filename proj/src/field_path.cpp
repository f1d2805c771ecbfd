#include "massgate/field_path.hpp"

#include <stdexcept>

namespace massgate {

namespace {
const std::string kEmpty;
}

FieldPath::FieldPath(std::vector<std::string> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (s.empty() || s.find('/') != std::string::npos) {
      throw std::invalid_argument("field path segment must be non-empty and '/'-free: '" + s + "'");
    }
  }
}

FieldPath FieldPath::parse(const std::string& text) {
  if (text.empty()) {
    return FieldPath{};
  }
  std::vector<std::string> segments;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('/', start);
    if (end == std::string::npos) {
      end = text.size();
    }
    segments.push_back(text.substr(start, end - start));
    start = end + 1;
    if (end == text.size()) {
      break;
    }
  }
  return FieldPath{std::move(segments)};
}

FieldPath FieldPath::appended(const std::string& segment) const {
  auto copy = segments_;
  copy.push_back(segment);
  return FieldPath{std::move(copy)};
}

FieldPath FieldPath::without_arrays() const {
  std::vector<std::string> kept;
  for (const auto& s : segments_) {
    if (s != kArraySegment) {
      kept.push_back(s);
    }
  }
  FieldPath result;
  result.segments_ = std::move(kept);
  return result;
}

const std::string& FieldPath::leaf_name() const {
  return segments_.empty() ? kEmpty : segments_.back();
}

std::string FieldPath::to_string() const {
  std::string out;
  for (size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0) {
      out += '/';
    }
    out += segments_[i];
  }
  return out;
}

}  // namespace massgate
