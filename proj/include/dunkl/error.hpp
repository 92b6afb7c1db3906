#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

enum class ErrorKind {
  Input,       // malformed arguments or configuration
  Capability,  // operation not available for this root system kind
  Structural,  // grid or group invariants violated
  Numerical,   // conditioning, floors, non-convergence
  Range,       // argument outside the supported evaluation range
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

inline void require(bool cond, ErrorKind kind, const char* module, const std::string& what) {
  if (!cond) throw Error(kind, module, what);
}

}  // namespace dunkl
