#pragma once

#include <stdexcept>
#include <string>

namespace cubmot {

enum class ErrorKind {
  structural,   // mismatched shapes or variety data
  domain,       // input outside an operation's domain
  internal,     // an invariant that should hold by construction failed
  unsupported,  // valid input that the library deliberately does not handle
  config,       // malformed configuration / JSON
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace cubmot
