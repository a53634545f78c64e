#pragma once

#include <stdexcept>
#include <string>

namespace redinv {

/// Base of every error raised by the library. All of them signal bad input
/// (the CLI maps them to exit code 2); failed mathematical checks are
/// reported through verdicts instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that does not descend to the presented quotient groups.
class IllDefinedHom : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class InvalidComplex : public Error {
 public:
  using Error::Error;
};

class InvalidDatum : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace redinv
