#pragma once

#include <stdexcept>

namespace logitdyn::cli {

/// Malformed or invalid configuration; the message names the field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failed file read/write.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logitdyn::cli
