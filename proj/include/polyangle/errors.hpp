#pragma once

#include <stdexcept>
#include <string>

namespace polyangle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvexInput : public Error {
 public:
  using Error::Error;
};

/// Zero area, too few vertices, non-positive side, non-finite coordinates.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A sampling or geometric operation was asked of the circle limit.
class PredictionOnlyShape : public Error {
 public:
  using Error::Error;
};

/// Apex coincides with a base vertex; the angle there is undefined.
class DegenerateApex : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

class InvalidN : public Error {
 public:
  using Error::Error;
};

/// Malformed region / method / range string. `token()` names the offending piece.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace polyangle
