#pragma once

#include <stdexcept>
#include <string>

namespace alignaug {

// Bad inputs: malformed files, shape mismatches, invalid arguments.
// The CLI maps these to exit code 2.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failures: factorizations that fail, non-finite values where
// finite ones are required. CLI exit code 3.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A query point lies outside the closed tessellation domain.
struct out_of_domain : data_error {
  using data_error::data_error;
};

// File I/O failures, typed so callers and tests can distinguish causes.
struct io_error : data_error {
  enum class Kind {
    bad_path,
    wrong_magic,
    truncated,
    dimension_overflow,
    version_mismatch,
    malformed,
  };

  io_error(Kind k, const std::string& msg) : data_error(msg), kind(k) {}

  Kind kind;
};

}  // namespace alignaug
