#pragma once

#include <stdexcept>
#include <string>

namespace crosskit {

// Every failure carries a stable code (UNKNOWN_VERTEX, BAD_INTERVAL, ...) so
// callers and the CLI can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace crosskit
