#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcr {

// Base of every error thrown by the library. The CLI maps subclasses onto
// exit codes: InputError -> 2, DomainError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed text, missing names, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             std::string found);

  // 1-based byte offset into the parsed text.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

class UnknownIdentifierError : public InputError {
 public:
  UnknownIdentifierError(std::size_t offset, std::string identifier);

  std::size_t offset() const { return offset_; }
  const std::string& identifier() const { return identifier_; }

 private:
  std::size_t offset_;
  std::string identifier_;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class MissingVariableError : public InputError {
 public:
  explicit MissingVariableError(std::string variable);
  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

// Numeric domain violation (log of non-positive, division by zero,
// non-finite intermediate, singular quaternion, solver blow-up).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Identity testing could not find any domain-valid sample point.
class InconclusiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qcr
