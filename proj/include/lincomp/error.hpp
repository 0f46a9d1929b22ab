#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lincomp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed model text. `position()` is the byte offset reported by the
/// JSON reader (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed model that violates a model invariant (self-loop,
/// out-of-range index, duplicate edge, empty inputs/outputs).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// An analysis was asked for on a model that does not meet its
/// preconditions (e.g. no input reaches the output, wrong transform shape).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bijection that is not total or not injective over the parameters it
/// is applied to.
class BijectionError : public Error {
 public:
  using Error::Error;
};

/// A bounded computation refused to start because its input exceeds the
/// configured cap (permutation search, elimination, oracle determinant).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A transform produced a model whose coefficient map does not match the
/// source under the emitted parameter map.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lincomp
