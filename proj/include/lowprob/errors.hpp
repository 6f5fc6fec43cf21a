#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowprob {

/// Malformed textual input (event literals, capacity files). Carries the
/// 1-based line and 0-based column where the problem was detected; zero when
/// not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Operands live on different outcome spaces.
class FrameMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds an exhaustive-enumeration cap.
class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Conditioning on an event whose upper probability is zero, or on which no
/// consistent distribution puts positive mass.
class UndefinedConditional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A method was asked to run without its precondition being certified.
class PreconditionUnmet : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No distribution is consistent with the lower probability.
class EmptyCredalSet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lowprob
