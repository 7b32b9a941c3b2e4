#pragma once

#include <stdexcept>
#include <string>

namespace paperlab {

enum class ErrorCode {
  kArithmetic,      // e.g. inversion of zero
  kParse,           // polynomial / matrix / JSON input
  kRingMismatch,
  kDimension,
  kInvalidArgument,
  kResourceCap,     // closure or computation exceeded a configured cap
  kInternal,        // a self-check failed
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace paperlab
