#pragma once

#include <stdexcept>
#include <string>

namespace filtra {

enum class ErrorKind {
  kValidation,  // malformed or inconsistent input data
  kLookup,      // unknown vertex / id
  kDomain,      // arguments outside an operation's domain
  kStructure,   // structurally invalid path or tree
  kSize,        // configured cap exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::kValidation: return "validation";
      case ErrorKind::kLookup: return "lookup";
      case ErrorKind::kDomain: return "domain";
      case ErrorKind::kStructure: return "structure";
      case ErrorKind::kSize: return "size";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

}  // namespace filtra
