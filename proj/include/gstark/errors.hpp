#pragma once

#include <stdexcept>
#include <string>

namespace gstark {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Not enough p-adic digits to answer.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class NoRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A divisor or pivot that must be nonzero vanished to working precision.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out.
class SearchBoundError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace gstark
