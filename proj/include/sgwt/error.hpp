#pragma once

#include <stdexcept>
#include <string>

namespace sgwt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a parameter outside its documented range, or mismatched
/// dimensions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input data is malformed: bad files, invalid edges, empty masks.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed (oracle size limit, no convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgwt
