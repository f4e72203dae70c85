#pragma once

#include <stdexcept>
#include <string>

namespace selfloop {

/// Input outside an operation's domain (bad vertex index, unknown family, ...).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input (graph6, loop lines).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Eigensolver non-convergence, failed residual checks, broken trace identities.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace selfloop
