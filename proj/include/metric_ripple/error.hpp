#pragma once

#include <stdexcept>
#include <string>

namespace metric_ripple {

enum class ErrorCode {
  InvalidArgument = 1,
  Precondition = 2,
  NotConverged = 3,
};

// Single exception type for the library; the code maps onto the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, const std::string& message,
                    ErrorCode code = ErrorCode::InvalidArgument) {
  if (!condition) throw Error(code, message);
}

}  // namespace metric_ripple
