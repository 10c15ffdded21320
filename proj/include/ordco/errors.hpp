#pragma once

#include <stdexcept>
#include <string>

namespace ordco {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group, pair, word, integer).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A family symbol with a rank outside its admissible range, e.g. D3 or G5.
class InvalidRank : public Error {
 public:
  using Error::Error;
};

/// A pair whose sides have different Weyl degree multisets.
class NotACoincidence : public Error {
 public:
  using Error::Error;
};

/// Factorization gave up; the composite part exceeded the configured bound.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A compact group symbol without a split-form entry.
class DictionaryMiss : public Error {
 public:
  using Error::Error;
};

/// No connector word exists for the requested pair of simple types.
class NoConnector : public Error {
 public:
  using Error::Error;
};

}  // namespace ordco
