#pragma once

#include <stdexcept>
#include <string>

namespace wsgap {

enum class ErrorCode {
  not_coprime,
  bad_point_count,
  bad_degree,
  empty_input,
  length_mismatch,
  overflow,
  too_large,
  invalid_argument,
};

const char* to_string(ErrorCode code) noexcept;

// Domain error raised by every engine entry point. The CLI maps it to exit
// status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wsgap
