#pragma once

#include <stdexcept>
#include <string>

namespace lnmin {

// Error taxonomy shared by the library and the CLI exit codes:
//   2 = the input does not define a solvable problem
//   3 = the caller violated a documented precondition
//   4 = an internal invariant failed
class Error : public std::runtime_error {
 public:
  Error(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}

  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

class InfeasibleInputError : public Error {
 public:
  explicit InfeasibleInputError(const std::string& message) : Error(2, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error(3, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error(4, message) {}
};

}  // namespace lnmin
