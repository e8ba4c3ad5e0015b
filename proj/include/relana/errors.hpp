#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace relana {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// construction / argument contract violations
struct DimensionError : Error {
  using Error::Error;
};
struct ValueError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};

// swap-walk preconditions
struct PatternNotAvoidedError : Error {
  using Error::Error;
};
struct NoLadderError : Error {
  using Error::Error;
};

// limit machinery
struct NotConvergedError : Error {
  NotConvergedError(const std::string& msg, std::vector<std::size_t> unstable)
      : Error(msg), unstable_types(std::move(unstable)) {}
  std::vector<std::size_t> unstable_types;
};

struct NotFoundError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::size_t line;
};

}  // namespace relana
