#pragma once

#include <stdexcept>
#include <string>

namespace sencalc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
  public:
    using Error::Error;
};

class PrecisionError : public Error {
  public:
    using Error::Error;
};

class IntegralityViolation : public Error {
  public:
    using Error::Error;
};

class Unsupported : public Error {
  public:
    using Error::Error;
};

class InternalError : public Error {
  public:
    using Error::Error;
};

class NotAWittVector : public Error {
  public:
    NotAWittVector(int index, const std::string& what)
        : Error(what), index_(index) {}
    int index() const { return index_; }

  private:
    int index_;
};

class InvalidFgl : public Error {
  public:
    InvalidFgl(int degree, const std::string& what)
        : Error(what), degree_(degree) {}
    int degree() const { return degree_; }

  private:
    int degree_;
};

}  // namespace sencalc
