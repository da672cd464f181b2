#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lascar {

/// Bad basis files, dependent certificates, refinement cap exhaustion,
/// values built over different bases.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ordering could not be decided within the configured number of
/// certificate halvings.
class RefinementError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A construction was asked to run on inputs violating its contract
/// (dependent points, mismatched endpoints, non-shells).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lascar
