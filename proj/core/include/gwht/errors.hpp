#pragma once

#include <stdexcept>
#include <string>

namespace gwht {

/// Malformed or mathematically invalid input (bad modulus, rank-deficient
/// matrix, zero column where forbidden, syntax error in a code file).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A size limit was exceeded (field order, table size, enumeration space).
class BudgetError : public std::length_error {
 public:
  explicit BudgetError(const std::string& what) : std::length_error(what) {}
};

/// The covering-radius iteration ran past j = n without every syndrome
/// becoming reachable. Only happens when a precondition was broken.
class IterationCapError : public std::runtime_error {
 public:
  explicit IterationCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwht
