#pragma once

#include <stdexcept>
#include <string>

namespace srtk {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. Line numbers are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A tag whose position letter is outside the scheme's tag set.
class TagSetError : public ParseError {
public:
  using ParseError::ParseError;
};

// Invalid configuration value (bad distribution, bad density, ...).
class ConfigError : public Error {
public:
  using Error::Error;
};

// Structurally invalid arguments (overlapping spans, misaligned outputs, ...).
class InputError : public Error {
public:
  using Error::Error;
};

class TrainingError : public Error {
public:
  using Error::Error;
};

}  // namespace srtk
