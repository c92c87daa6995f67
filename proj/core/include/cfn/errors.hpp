#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfn {

class InvalidDigit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InadmissibleString : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidRewrite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A digit source ran out before the requested count.
class InsufficientDigits : public std::runtime_error {
 public:
  InsufficientDigits(const std::string& what, std::size_t needed, std::size_t available)
      : std::runtime_error(what), needed_(needed), available_(available) {}
  std::size_t needed() const noexcept { return needed_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t needed_;
  std::size_t available_;
};

/// A conversion trace does not reach the requested output index.
class NeedsMoreInput : public std::runtime_error {
 public:
  NeedsMoreInput(const std::string& what, std::size_t required_extension)
      : std::runtime_error(what), required_extension_(required_extension) {}
  std::size_t required_extension() const noexcept { return required_extension_; }

 private:
  std::size_t required_extension_;
};

/// Partial quotient does not fit the 64-bit digit representation.
class DigitOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace cfn
