#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Evaluation at a root of a reduced denominator.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A bad argument supplied by the caller (even n where odd is required,
// a non-prime modulus, and so on).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed. Always indicates a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qeuler
