#pragma once

#include <stdexcept>
#include <string>

namespace chromaplex {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size or count parameter is outside the allowed range (n = 0, odd n, ...).
class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

// Inconsistent inputs handed to a constructor or operation.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// The request is well-formed but not covered (D < 2 for the degree, a
// disconnected graph for jacket genera, an observable a model lacks).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed text input: serialized graphs, base graphs, configs.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chromaplex
