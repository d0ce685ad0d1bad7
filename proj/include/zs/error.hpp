#pragma once

#include <stdexcept>
#include <string>

namespace zs {

// Error codes used across the library:
//   invalid-parameter, invalid-argument, resource-limit, not-a-subsequence,
//   unsupported-presentation, parse-error, no-witness, classification-failure
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void require(bool ok, const char* code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace zs
