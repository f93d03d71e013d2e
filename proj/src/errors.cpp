#include "wm/errors.hpp"

namespace wm {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::ZeroPairViolation: return "ZeroPairViolation";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::NotSpecial: return "NotSpecial";
    case Errc::NotARoot: return "NotARoot";
    case Errc::SignMismatch: return "SignMismatch";
    case Errc::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case Errc::PointNotInCone: return "PointNotInCone";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
    case Errc::Internal: return "Internal";
  }
  return "UnknownError";
}

}  // namespace wm
