#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syncur {

// Error families; the C API maps these onto syncur_status codes.
enum class ErrorCode {
  Syntax,      // malformed bracketed tree or pattern text
  Structure,   // well-formed text, invalid tree shape
  Io,          // file system failures
  Data,        // alignment mismatch, empty pools, missing metadata
  Validation,  // catalog/manifest/plan consistency
  InvalidArg,  // caller misuse (unknown strategy, group, corpus type)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Carries the byte offset of the failure within the offending line.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::Syntax,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace syncur
