#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hedgesim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A forced march, partition or valuation that violates its structural
/// invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Unknown agent, world or player label.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A game configuration value outside its admissible range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An assertion whose content is incompatible with every live world.
class AbsurdUpdate : public Error {
 public:
  using Error::Error;
};

/// A signal the listener assigns zero marginal probability to.
class UnexpectedSignal : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario text. `line()` is 1-based; 0 means "whole file".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A scenario key whose value is syntactically fine but out of range.
class RangeError : public Error {
 public:
  RangeError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace hedgesim
