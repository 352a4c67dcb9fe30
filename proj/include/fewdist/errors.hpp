#pragma once

#include <stdexcept>
#include <string>

namespace fewdist {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public Error {
public:
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

class NonSquareError : public Error {
public:
  explicit NonSquareError(const std::string& what) : Error(what) {}
};

class NonSymmetricError : public Error {
public:
  explicit NonSymmetricError(const std::string& what) : Error(what) {}
};

class DuplicatePointsError : public Error {
public:
  explicit DuplicatePointsError(const std::string& what) : Error(what) {}
};

class DegreeTooHighError : public Error {
public:
  explicit DegreeTooHighError(const std::string& what) : Error(what) {}
};

class SetTooLargeError : public Error {
public:
  explicit SetTooLargeError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class UnknownFamilyError : public Error {
public:
  explicit UnknownFamilyError(const std::string& what) : Error(what) {}
};

class BadParamsError : public Error {
public:
  explicit BadParamsError(const std::string& what) : Error(what) {}
};

/// Raised when an exact-arithmetic internal invariant fails. Seeing this
/// means the library itself is wrong, never the input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fewdist
