#ifndef CTSMC_ERRORS_HPP
#define CTSMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctsmc {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Argument outside its mathematical domain (negative time, a > b, ...).
struct DomainError : Error {
  explicit DomainError(const std::string &msg) : Error(msg) {}
};

// Invalid object state at construction (NaN parameter, bad dimensions, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string &msg) : Error(msg) {}
};

// Operation requires some other computation to have run first.
struct StateError : Error {
  explicit StateError(const std::string &msg) : Error(msg) {}
};

// Inference failed on valid inputs (zero-likelihood observation,
// numerical instability).  Carries the interval index when known.
struct InferenceError : Error {
  explicit InferenceError(const std::string &msg, long interval = -1)
      : Error(msg), interval_index(interval) {}
  long interval_index;
};

// Requested computation would exceed a resource budget.
struct ResourceError : Error {
  explicit ResourceError(const std::string &msg) : Error(msg) {}
};

// Mass accumulation failed to converge within the iteration cap.
struct TruncationError : Error {
  explicit TruncationError(const std::string &msg) : Error(msg) {}
};

}  // namespace ctsmc

#endif
