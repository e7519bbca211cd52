#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Malformed or unreadable input (bad JSON, missing fields, wrong types).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cyclo
