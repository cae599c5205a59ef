#pragma once

#include <stdexcept>
#include <string>

namespace houghton {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A map that is not an injective eventual translation, or a point outside Y_n.
class MalformedElement : public Error {
 public:
  using Error::Error;
};

class NotGroupElement : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// A word that was required to evaluate to the identity does not.
class NotNullHomotopic : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A claimed structural property failed on a concrete instance.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace houghton
