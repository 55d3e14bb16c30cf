#pragma once

#include <stdexcept>
#include <string>

namespace mctx {

// Boundary types of a composite do not line up.
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Morphisms from different backends, or an operation the backend lacks.
class TheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mctx
