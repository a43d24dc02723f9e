#pragma once

#include <stdexcept>
#include <string>

namespace relfork {

// All library failures carry a short machine-readable code next to the
// human message, e.g. "base-size-mismatch" or "undecidable-composition".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace relfork
