#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prank {

/// Mixing values from different field or algebra contexts.
struct context_error : std::logic_error {
  explicit context_error(const std::string& what) : std::logic_error(what) {}
};

/// Incompatible dimensions.
struct shape_error : std::invalid_argument {
  explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration or search would exceed its configured budget.
struct capacity_error : std::runtime_error {
  capacity_error(const std::string& what, uint64_t bound_)
      : std::runtime_error(what), bound(bound_) {}
  uint64_t bound;
};

/// A documented precondition of an operation does not hold.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Operating on an algebra that failed axiom validation.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural identity that should hold unconditionally was observed to fail.
/// Raised instead of silently picking one of several disagreeing answers.
struct invariant_violation : std::runtime_error {
  explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prank
