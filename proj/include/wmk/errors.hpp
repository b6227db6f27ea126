#pragma once

#include <stdexcept>
#include <string>

namespace wmk {

// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A connected cover was required (first order entry must not be BOTTOM).
class NotConnectedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The representation violates a hypothesis of a classification theorem.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An intermediate value left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace wmk
