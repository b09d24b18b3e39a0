#pragma once

#include <stdexcept>
#include <string>

namespace fusion_forge {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Malformed input: bad JSON, wrong table shapes, tables that are not groups.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ParseError"; }
};

/// Cocycle or action data failed its identities.
class ValidationFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ValidationFailure"; }
};

/// The numerical split of a twisted group algebra did not reach sum d^2 = |G|.
class DecompositionFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DecompositionFailure"; }
};

class NonIntegralMultiplicity : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NonIntegralMultiplicity"; }
};

/// Two projective representations that must share a factor set do not.
class FactorSetMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "FactorSetMismatch"; }
};

class DualNotFound : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DualNotFound"; }
};

class RankMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "RankMismatch"; }
};

}  // namespace fusion_forge
