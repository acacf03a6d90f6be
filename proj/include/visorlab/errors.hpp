#pragma once

#include <stdexcept>
#include <string>

namespace visorlab {

/// Invalid argument to a library operation (bad counts, empty inputs, violated preconditions).
class ArgumentError : public std::invalid_argument {
  public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A scalar outside the mathematical domain of an operation, e.g. a rib parameter with |s| > 1.
class DomainError : public ArgumentError {
  public:
    explicit DomainError(const std::string& what) : ArgumentError(what) {}
};

/// Zero-length rib (|s| = 1) passed where a proper rib is required.
class DegenerateRibError : public ArgumentError {
  public:
    explicit DegenerateRibError(const std::string& what) : ArgumentError(what) {}
};

/// An iterative solve failed to converge within its budget.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A one-parameter family has no envelope (every sample was singular).
class EnvelopeUndefinedError : public std::runtime_error {
  public:
    explicit EnvelopeUndefinedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace visorlab
