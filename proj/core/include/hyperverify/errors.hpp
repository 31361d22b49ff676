#pragma once

#include <stdexcept>

namespace hyperverify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma argument sits on a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A closed form has no finite value at this point (numerator pole, zero divisor).
class DivergentError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperverify
