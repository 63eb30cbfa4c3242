#pragma once

#include <stdexcept>
#include <string>

namespace cwm {

enum class ErrorCode {
  EmptyCorpus = 1,
  InvalidWindow,
  ParseError,
  DegenerateVector,
  DegenerateWord,
  DegeneratePair,
  DegenerateMean,
  UnknownWord,
  InsufficientNegatives,
  InsufficientCoverage,
  InfeasibleConstruction,
  IncompatibleVocab,
  InvalidConfig,
  IoError,
};

const char* error_name(ErrorCode code) noexcept;

class CwmError : public std::runtime_error {
 public:
  CwmError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw CwmError(code, what);
}

}  // namespace cwm
