#pragma once

#include <stdexcept>
#include <string>

namespace glued {

// Status values shared by the C API; the CLI maps them onto exit codes per command.
enum class Status : int {
  Ok = 0,
  NotGlued = 1,
  ParseError = 2,
  NotReduced = 3,
  BadSplit = 4,
  BadInput = 5,  // glue inputs not reduced / not minimal / malformed recipe
  Exhausted = 6,
  DegreeNotInSemigroup = 7,
  TooManyGenerators = 8,
  DimensionMismatch = 9,
  BadArgument = 10,
  Internal = 11,
  NotMinimal = 12,
  NotAffine = 13,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace glued
