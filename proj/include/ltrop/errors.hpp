#pragma once

#include <stdexcept>
#include <string>

namespace ltrop {

// Malformed input or violated preconditions (CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented implementation limit was reached: extension degree bound,
// witness search exhausted, insufficient truncation (CLI exit code 3).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A well-formed request whose mathematical answer is negative, such as
// lifting a point outside the tropical variety (CLI exit code 1).
class NegativeResult : public std::domain_error {
 public:
  explicit NegativeResult(const std::string& what) : std::domain_error(what) {}
};

// A mathematical guarantee failed to hold; this indicates a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ltrop
