#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sharklab {

// Input outside the domain of an operation (bad rational, point outside the
// interval, malformed map).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition of an operation did not hold for the given data,
// e.g. a cycle whose covering relation fails at some index.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid or missing parameter combination.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A piece or walk budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t budget)
      : std::runtime_error(what), budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace sharklab
