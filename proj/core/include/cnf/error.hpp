#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition or domain violation on an input value.
struct DomainError : Error {
  using Error::Error;
};

struct DegenerateInput : Error {
  using Error::Error;
};

struct NotDivisible : Error {
  NotDivisible(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
  std::size_t position;  // degree index of the first failing coefficient
};

struct NotSquarefree : Error {
  using Error::Error;
};

struct NotSimpleFactor : Error {
  using Error::Error;
};

struct PrecisionExhausted : Error {
  using Error::Error;
};

struct ResourceLimit : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace cnf
