#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dicut {

/// Argument outside the operation's domain (bad probability, bad vertex id, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity that is not defined for the given input, e.g. the cut value of an
/// empty graph.
class UndefinedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value outside the closed range covered by a threshold vector.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The caller broke a documented precondition (e.g. a vertex degree outside
/// the degree partition).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Refusal to run an exponential-time routine above its configured ceiling.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dicut
