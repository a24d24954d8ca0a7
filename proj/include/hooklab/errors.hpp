#pragma once

#include <stdexcept>
#include <string>

namespace hooklab {

// Raised when a requested enumeration would exceed the configured partition
// ceiling. Callers are expected to lower n_max.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two truncated series of different order met under the strict policy.
class order_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bivariate product produced a nonzero coefficient above the x-degree cap.
class degree_overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A finalized series still carried a nonzero coefficient at a negative
// exponent, or some other internal invariant broke.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numerical evaluation outside its admissible region (|w| >= 1, cone
// violation, overflow guard, non-convergence).
class numeric_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hooklab
