#pragma once

#include <stdexcept>
#include <string>

namespace hurst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside an operation's declared domain
/// (bad window, unknown method tag, mismatched lengths, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The data itself cannot support the requested computation.
class DataError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public DataError {
 public:
  using DataError::DataError;
};

/// A statistic that must be strictly positive collapsed to zero
/// (constant series, collinear profile, ...).
class DegenerateSequenceError : public DataError {
 public:
  using DataError::DataError;
};

/// Logarithm of a nonpositive value was requested.
class DomainError : public DataError {
 public:
  DomainError(const std::string& what, std::size_t index)
      : DataError(what), index_(index) {}

  /// 1-based position of the offending entry.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DataError(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// No candidate length in the search range admits a bounded proper factor.
class NoPartitionError : public DataError {
 public:
  using DataError::DataError;
};

class SingularSystemError : public DataError {
 public:
  using DataError::DataError;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double previous, double last)
      : Error(what), previous_(previous), last_(last) {}

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

}  // namespace hurst
