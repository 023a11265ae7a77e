#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Invalid input: malformed files, axiom violations, broken preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A desk-scale limit was hit. Callers report these as refusals, never as
// results.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
