#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

enum class ErrorKind {
  DanglingEndpoint,
  DuplicateId,
  OmegaEdgesUnsupported,
  GraphMismatch,
  IrregularVertexOnExpansion,
  NotDegreeZero,
  UnknownId,
  NotComposable,
  SourceMismatch,
  InvalidLasso,
  NotComposableTails,
  NoInfinitePath,
  InvalidInput,
  SyntaxError,
};

const char* to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace lpa
