#pragma once

#include <stdexcept>
#include <string>

namespace modkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input data that the algorithms refuse to handle (e.g. a reducible fusion graph).
struct DegenerateInput : Error {
  using Error::Error;
};

/// z = sum d^2 omega vanishes, so S and the central charge are undefined.
struct DegenerateNormalization : Error {
  using Error::Error;
};

/// A Rehren row sum that is neither w*d nor 0.
struct DichotomyViolation : Error {
  using Error::Error;
};

/// Enumeration exceeded its node budget; no partial list is returned.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed or unsupported file content.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace modkit
