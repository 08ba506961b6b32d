#pragma once

#include <stdexcept>
#include <string>

namespace dpo {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-injective input,
/// mismatched endpoint graphs, non-bijective inversion, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input or a structural format violation such as a duplicate id.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A check that the underlying theory guarantees failed. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpo
