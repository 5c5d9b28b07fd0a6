#pragma once

#include <stdexcept>
#include <string>

namespace smece {

// Exit code mapping used by the CLI: 2 config/validation, 3 data format, 4 I/O.

/// Violated precondition on a value handed to a metric or model.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Invalid run configuration, detected before any computation starts.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input file content.
class DataFormatError : public std::runtime_error {
 public:
  explicit DataFormatError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smece
