#pragma once

#include <stdexcept>
#include <string>

namespace starsuper {

/// Bad parameters or malformed input (CLI exit code 1).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A computation would exceed a configured size cap (CLI exit code 2).
class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is well defined but outside what this library computes,
/// e.g. a center whose minimal polynomials do not split over the rationals.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check failed. This signals a bug, never bad input (CLI exit code 3).
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace starsuper
