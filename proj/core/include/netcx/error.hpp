#pragma once

#include <stdexcept>
#include <string>

namespace netcx {

/// Raised for malformed or inconsistent user input (bad files, invalid
/// parameters, contract violations at API boundaries).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical kernel cannot produce a trustworthy answer
/// (non-finite intermediate values, failed factorization).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netcx
