// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lqi {

// Dimension beyond the configured maximum.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed or out-of-range caller input (bad subset, wrong factor count, unknown preset).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition on a value does not hold (non-Hermitian, det != 1, ...).
class ContractError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Matrix expected to be positive semidefinite has a clearly negative eigenvalue.
class PositivityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace lqi
