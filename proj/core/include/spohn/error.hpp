#pragma once

#include <stdexcept>
#include <string>

namespace spohn {

// A mathematical precondition does not hold (singular curve, degenerate game,
// point off a variety, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spohn
