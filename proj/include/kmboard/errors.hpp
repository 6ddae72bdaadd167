#ifndef KMBOARD_ERRORS_HPP_
#define KMBOARD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kmboard {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A collapsing map entry breaks mu(2) = 1 or 1 <= mu(2j) < 2j.
/// `index()` is the 1-based j of the first offending entry.
class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(int index)
      : Error("constraint violated at j=" + std::to_string(index)), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class KMismatch : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// The adjacent KM move at j is not acceptable for the current map.
class NotAcceptable : public Error {
 public:
  explicit NotAcceptable(int j)
      : Error("KM move at j=" + std::to_string(j) + " is not acceptable"), j_(j) {}
  int j() const { return j_; }

 private:
  int j_;
};

class NotTamed : public Error {
 public:
  using Error::Error;
};

class NotAllowable : public Error {
 public:
  using Error::Error;
};

class NotReference : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmboard

#endif  // KMBOARD_ERRORS_HPP_
