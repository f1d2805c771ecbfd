#pragma once

#include <stdexcept>
#include <string>

namespace massgate {

// Base for every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnresolvedRef : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersion : public Error {
 public:
  using Error::Error;
};

class RecursionLimit : public Error {
 public:
  using Error::Error;
};

class EmptyVocabulary : public Error {
 public:
  using Error::Error;
};

class UnknownOperation : public Error {
 public:
  using Error::Error;
};

class InvalidAnnotationValue : public Error {
 public:
  using Error::Error;
};

class TemplateNotApplicable : public Error {
 public:
  using Error::Error;
};

class InstantiationFailed : public Error {
 public:
  using Error::Error;
};

class IdNotFound : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

class FieldMissingInResponse : public Error {
 public:
  using Error::Error;
};

class TruthSchemaError : public Error {
 public:
  using Error::Error;
};

class BindError : public Error {
 public:
  using Error::Error;
};

}  // namespace massgate
