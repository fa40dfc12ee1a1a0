#pragma once

#include <stdexcept>
#include <string>

namespace scenic {

enum class ErrorKind {
  InvalidInput,
  InvalidConfig,
  Io,
  Parse,
  Corrupt,
  VersionMismatch,
  DimMismatch,
  ConstraintViolation,
  Diverged,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace scenic
