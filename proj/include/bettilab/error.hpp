#pragma once

#include <stdexcept>
#include <string>

namespace bettilab {

// Failure categories surfaced by the library. CLI maps MalformedInput to
// exit code 2 and everything else reported as a check failure to exit 1.
enum class Errc {
  MalformedInput,
  LayerOutOfRange,
  NotEnoughMonomials,
  NotAchievable,
  NotMacaulayLex,
  NotZStable,
  NotStronglyStable,
  CapsPresent,
  TooManyGenerators,
  ModeMismatch,
  ColonConditionFailed,
  NoCertificate,
  InvalidPieces,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace bettilab
