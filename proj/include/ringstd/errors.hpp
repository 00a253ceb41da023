#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringstd {

/// Caller violated a documented precondition (wrong ring, bad arity, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Leading data or degree requested for the zero element.
class EmptyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// div_r called with b outside the ideal generated by C.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A division certificate failed its exact identity check.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iteration or recursion cap was hit before the procedure finished.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent arithmetic left the representable range.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ringstd
