#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidwire {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1 and a JSON reason block.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
        message_(msg), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "parse"; }
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

// A move pattern does not match at the requested position.
class NotApplicable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not_applicable"; }
};

// A rewrite rule failed its own guarantee. Always an engine bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "verification"; }
};

class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, const std::string& msg)
      : Error("step " + std::to_string(step) + ": " + msg), step_(step) {}
  const char* kind() const noexcept override { return "script"; }
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// A generated family diagram failed a weight, linking or homology gate.
class GateFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "gate"; }
};

}  // namespace braidwire
