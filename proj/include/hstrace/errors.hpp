#pragma once

#include <stdexcept>
#include <string>

namespace hst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings.
class RingMismatch : public Error {
public:
  using Error::Error;
};

/// Matrix or module shapes do not fit together.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

/// A matrix entry violates the degree bookkeeping n_i - n_j + d.
class NotHomogeneous : public Error {
public:
  using Error::Error;
};

/// Malformed argument that is not a shape or ring problem.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Iterated syzygies did not vanish within the requested bound.
class LengthExceeded : public Error {
public:
  explicit LengthExceeded(int bound)
      : Error("resolution did not terminate within max_length = " + std::to_string(bound)),
        max_length(bound) {}
  int max_length;
};

/// An equation that exactness guarantees to be solvable was not. Indicates an engine bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace hst
