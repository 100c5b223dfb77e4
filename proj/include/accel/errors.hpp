#pragma once

#include <stdexcept>
#include <string>

namespace accel {

/// File could not be opened / written.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (message carries the offending line number).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally valid input that violates a data contract (empty recording,
/// non-finite sample, undefined metric denominator, ...).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Training produced a non-finite loss.
class divergence_error : public std::runtime_error {
 public:
  explicit divergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace accel
