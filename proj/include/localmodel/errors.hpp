#pragma once

#include <stdexcept>
#include <string>

namespace localmodel {

/// Raised when an alcove fails the adjacency or wraparound conditions.
class MalformedAlcove : public std::invalid_argument {
public:
  explicit MalformedAlcove(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operation is called outside its parameter domain.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Internal inconsistency detected during an algebraic computation.
class ComputationError : public std::runtime_error {
public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation ran past its deadline.
class Timeout : public std::runtime_error {
public:
  Timeout() : std::runtime_error("computation exceeded its time budget") {}
};

} // namespace localmodel
