#pragma once

#include <stdexcept>
#include <string>

namespace riders {

// Base of every error thrown by the library. The CLI maps each subclass to a
// stable exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad move, bad board, duplicate sample abscissa, ...
class InputError : public Error {
 public:
  using Error::Error;
};

// A well-formed query outside what the library can answer.
class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

// Quasipolynomial sampling did not reach the polynomial regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// A closed form produced a value that cannot be right (non-integral or
// negative count). Always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace riders
