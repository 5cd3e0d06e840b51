#pragma once

#include <stdexcept>
#include <string>

namespace mgf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An eigenvalue sits (numerically) on a gamma pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CommutativityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidShiftError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series hit its term cap before the tail flattened out.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& msg, int terms)
      : Error(msg), terms_used(terms) {}
  int terms_used;
};

class EigensolverError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class MaxSubdivisionsError : public QuadratureError {
 public:
  using QuadratureError::QuadratureError;
};

class NonFiniteIntegrandError : public QuadratureError {
 public:
  using QuadratureError::QuadratureError;
};

class UnknownIdentityError : public Error {
 public:
  using Error::Error;
};

class GeneratorInfeasibleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mgf
