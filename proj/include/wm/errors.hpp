#pragma once

#include <stdexcept>
#include <string>

namespace wm {

// Error conditions surfaced by the engine.  Validation errors carry the
// condition that fired so callers (and the CLI) can report it by name.
enum class Errc {
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroPairViolation,
  NotSymmetrizable,
  NotSpecial,
  NotARoot,
  SignMismatch,
  ResourceBudgetExceeded,
  PointNotInCone,
  ParseError,
  Overflow,
  Internal,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace wm
