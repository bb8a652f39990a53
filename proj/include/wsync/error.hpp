#pragma once

#include <stdexcept>
#include <string>

namespace wsync {

enum class ErrorCode {
  alphabet_mismatch,
  empty_alphabet,
  waa_required,
  precondition_violated,
  empty_input,
  instance_too_large,
  degenerate_formula,
  not_satisfying,
  invalid_witness,
  unsupported_for_classification,
  parse_error,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

/// All library failures are reported through this exception; `code()` tells
/// the caller which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wsync
