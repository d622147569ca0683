#pragma once

#include <stdexcept>
#include <string>

namespace pmrsim {

// Operand site counts disagree.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input violates a contract (non-Hermitian Hamiltonian, malformed config, ...).
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Desk-scale guardrail exceeded (dense matrix size, path-enumeration budget).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric argument is outside the range the implementation can evaluate
// without overflow.
struct numeric_range_error : std::range_error {
  using std::range_error::range_error;
};

}  // namespace pmrsim
