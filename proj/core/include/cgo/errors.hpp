#pragma once

#include <stdexcept>
#include <string>

namespace cgo {

/// Invalid problem/parameter setup (dimension mismatch, bad bounds, N < 2, ...).
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input data (offset files, scenario files). Carries line/position
/// context in the message.
class IngestionError : public std::runtime_error {
  public:
    explicit IngestionError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failures (unwritable output directory, failed writes).
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad command-line selectors (unknown problem/algorithm names).
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cgo
