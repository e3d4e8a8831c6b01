// Error codes shared by all modules; thrown as ringdec::Error.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringdec {

enum class ErrorCode {
  DuplicateName,
  KindSemanticsMismatch,
  NoInstance,
  KindMismatch,
  StructureLawViolation,
  DomainMismatch,
  SyntaxError,
  UnknownCarrier,
  UnknownHom,
  OpaqueCarrier,
  IndexOutOfRange,
  GenerationFailure,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors carry the byte offset of the failure and what was expected there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(position) + ", expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace ringdec
