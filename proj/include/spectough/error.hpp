#pragma once

#include <stdexcept>
#include <string>

namespace spectough {

enum class ErrorCode {
  InvalidArgument,
  MalformedInput,
  SizeOverflow,
  NotSymmetric,
  NotEquitable,
  Reducible,
  NotConverged,
  Disconnected,
  TooLarge,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; the code lets callers
// (and the CLI) distinguish bad input from numerical trouble.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectough
