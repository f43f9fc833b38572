#pragma once

#include <stdexcept>
#include <string>

namespace hypercross {

enum class ErrorKind {
  kDimension,     // shapes of matrices/vectors/configurations do not agree
  kOrdering,      // moment parameters not strictly increasing
  kDegenerate,    // input violates general position / flatness assumptions
  kPrecondition,  // operation contract violated
  kGeneration,    // random generator ran out of retries
  kParse,         // malformed text input
  kParameter,     // bad numeric parameter (budget, size, ...)
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypercross
