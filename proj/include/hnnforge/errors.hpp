#pragma once

#include <stdexcept>
#include <string>

namespace hnnforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arithmetic or word-size cap was exceeded. Never silent truncation.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Permutations of different degrees were combined.
struct DegreeMismatchError : Error {
  using Error::Error;
};

// certified_order_bound was asked to vouch for a degree whose search
// did not come back clean.
struct NotCertifiedError : Error {
  using Error::Error;
};

// Word text, u-list or presentation file did not parse.
struct WordParseError : Error {
  using Error::Error;
};

// validate() was handed an empty exponent sequence.
struct EmptySequenceError : Error {
  using Error::Error;
};

}  // namespace hnnforge
