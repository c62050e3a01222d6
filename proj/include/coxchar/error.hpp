#pragma once

#include <stdexcept>
#include <string>

namespace coxchar {

// Machine-readable failure categories; the CLI prints them as
// "error: <code>: <message>".
enum class ErrorCode {
  range,
  parse,
  budget,
  not_comparable,
  unclassifiable,
  interior_condition,
  model_mismatch,
  non_lattice,
  verification,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace coxchar
