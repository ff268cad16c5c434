#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched algebras or coordinate lengths.
class DimensionError : public Error {
  using Error::Error;
};

/// Input outside the required domain (open cone, unit domain, boundary margin).
class DomainError : public Error {
  using Error::Error;
};

/// Inversion of a numerically singular element or operator.
class SingularError : public Error {
 public:
  SingularError(const std::string& msg, double min_abs_eigenvalue)
      : Error(msg), min_abs_eigenvalue_(min_abs_eigenvalue) {}
  double min_abs_eigenvalue() const { return min_abs_eigenvalue_; }

 private:
  double min_abs_eigenvalue_;
};

/// Operation not defined for the given algebra or rule.
class UnsupportedError : public Error {
  using Error::Error;
};

/// Distribution or scenario parameter outside its admissible range.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& msg, int index = -1)
      : Error(msg), index_(index) {}
  /// Index of the offending parameter entry, or -1 if not applicable.
  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace symcone
