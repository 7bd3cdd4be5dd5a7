#pragma once

#include <stdexcept>
#include <string>

namespace fuzzy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a function or operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation not supported by a particular representation, e.g. d/dq of a
// callable profile registered without a derivative.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Incompatible sizes, intervals or block structures.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzy
