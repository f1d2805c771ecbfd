#include "massgate/yaml_bridge.hpp"

#include <yaml-cpp/yaml.h>

#include <cerrno>
#include <cstdlib>

#include "massgate/errors.hpp"

namespace massgate {

namespace {

bool parse_full_ll(const std::string& s, long long& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  out = v;
  return true;
}

bool parse_full_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  out = v;
  return true;
}

Json scalar_to_json(const YAML::Node& node) {
  const std::string& s = node.Scalar();
  // quoted scalars keep their string type
  if (node.Tag() == "!") {
    return Json(s);
  }
  if (s.empty() || s == "~" || s == "null" || s == "Null" || s == "NULL") {
    return Json(nullptr);
  }
  if (s == "true" || s == "True" || s == "TRUE") return Json(true);
  if (s == "false" || s == "False" || s == "FALSE") return Json(false);
  long long i = 0;
  if (parse_full_ll(s, i)) return Json(i);
  double d = 0;
  if (parse_full_double(s, d)) return Json(d);
  return Json(s);
}

Json node_to_json(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
      return Json(nullptr);
    case YAML::NodeType::Scalar:
      return scalar_to_json(node);
    case YAML::NodeType::Sequence: {
      Json arr = Json::array();
      for (const auto& child : node) {
        arr.push_back(node_to_json(child));
      }
      return arr;
    }
    case YAML::NodeType::Map: {
      Json obj = Json::object();
      for (const auto& kv : node) {
        obj[kv.first.Scalar()] = node_to_json(kv.second);
      }
      return obj;
    }
    case YAML::NodeType::Undefined:
      return Json(nullptr);
  }
  return Json(nullptr);
}

void emit_json(YAML::Emitter& out, const Json& value) {
  switch (value.type()) {
    case Json::value_t::null:
      out << YAML::Null;
      break;
    case Json::value_t::boolean:
      out << value.get<bool>();
      break;
    case Json::value_t::number_integer:
      out << value.get<long long>();
      break;
    case Json::value_t::number_unsigned:
      out << value.get<unsigned long long>();
      break;
    case Json::value_t::number_float:
      out << value.get<double>();
      break;
    case Json::value_t::string:
      out << YAML::DoubleQuoted << value.get<std::string>();
      break;
    case Json::value_t::array:
      out << YAML::BeginSeq;
      for (const auto& item : value) {
        emit_json(out, item);
      }
      out << YAML::EndSeq;
      break;
    case Json::value_t::object:
      out << YAML::BeginMap;
      for (const auto& [key, item] : value.items()) {
        out << YAML::Key << YAML::DoubleQuoted << key << YAML::Value;
        emit_json(out, item);
      }
      out << YAML::EndMap;
      break;
    default:
      throw ParseError("unsupported JSON value type for YAML emission");
  }
}

}  // namespace

Json yaml_to_json(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("YAML parse error: ") + e.what());
  }
  return node_to_json(root);
}

std::string json_to_yaml(const Json& value) {
  YAML::Emitter out;
  out.SetIndent(2);
  emit_json(out, value);
  std::string text = out.c_str() ? out.c_str() : "";
  text += '\n';
  return text;
}

}  // namespace massgate
