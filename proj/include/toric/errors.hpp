#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

enum class ErrorCode {
  validation,
  domain,
  degenerate,
  parse,
  usage,
  io,
};

/// Machine-readable name used in CLI diagnostics and service error bodies.
inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation: return "validation_error";
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::degenerate: return "degenerate_error";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::usage: return "usage_error";
    case ErrorCode::io: return "io_error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  // Offending document field or argument, empty when not attributable.
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message, std::string field = {})
      : Error(ErrorCode::validation, message, std::move(field)) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message, std::string field = {})
      : Error(ErrorCode::domain, message, std::move(field)) {}
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& message, std::string field = {})
      : Error(ErrorCode::degenerate, message, std::move(field)) {}
};

}  // namespace toric
