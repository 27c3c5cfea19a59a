// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace curio {

/// Vector arguments whose lengths must agree did not.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A run configuration failed validation. The message names the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The regression design matrix is rank deficient. The message names the
/// collinear column.
struct DegenerateDesignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A file could not be read, written, or parsed.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace curio
