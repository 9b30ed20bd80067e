#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bolano {

/// Base class for every error raised by the kernel. User-input problems and
/// internal invariant violations are distinguished by subclass so that front
/// ends can map them onto different exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class NonIntegerLadderPower : public Error {
 public:
  using Error::Error;
};

class UnsupportedBounds : public Error {
 public:
  using Error::Error;
};

class UnsupportedScalarPower : public Error {
 public:
  using Error::Error;
};

class UnsupportedExpression : public Error {
 public:
  using Error::Error;
};

class ComplexSymbolUnsupported : public Error {
 public:
  using Error::Error;
};

class EmptyObservable : public Error {
 public:
  using Error::Error;
};

class MissingSubstitution : public Error {
 public:
  using Error::Error;
};

class RecordError : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails. Never caused by user
/// input; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bolano
