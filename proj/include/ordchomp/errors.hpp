#pragma once

#include <stdexcept>
#include <string>

namespace ordchomp {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Subtraction b - a requested with a > b.
struct UnderflowError : Error {
  using Error::Error;
};

// Malformed ordinal expression; `at` is a byte offset into the input.
struct ParseError : Error {
  size_t at;
  ParseError(const std::string& msg, size_t pos) : Error(msg), at(pos) {}
};

// An enumeration or construction would exceed a configured cap.
struct BoundTooLarge : Error {
  using Error::Error;
};

// gcd of the natural generators is not 1, so the gap set is infinite.
struct InfiniteGaps : Error {
  using Error::Error;
};

// decompose() could not express the input in grouped factored form.
struct NotDecomposable : Error {
  using Error::Error;
};

// A game move names an element that is not alive.
struct DeadElement : Error {
  using Error::Error;
};

struct NotInSemigroup : Error {
  using Error::Error;
};

// A strategy or construction precondition does not hold.
struct NotApplicable : Error {
  using Error::Error;
};

}  // namespace ordchomp
