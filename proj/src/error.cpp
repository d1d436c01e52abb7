#include "castle/error.hpp"

namespace castle {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::WrongLength: return "WrongLength";
    case Errc::BadSum: return "BadSum";
    case Errc::RepeatedResidueClass: return "RepeatedResidueClass";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::BadResidue: return "BadResidue";
    case Errc::ImproperSet: return "ImproperSet";
    case Errc::WouldBeImproper: return "WouldBeImproper";
    case Errc::WouldBeEmpty: return "WouldBeEmpty";
    case Errc::NotConnected: return "NotConnected";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::IdentityInput: return "IdentityInput";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::InvalidCode: return "InvalidCode";
    case Errc::NotContained: return "NotContained";
    case Errc::DescentViolation: return "DescentViolation";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotStandard: return "NotStandard";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotBounded: return "NotBounded";
    case Errc::NotACore: return "NotACore";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::IndexTooLarge: return "IndexTooLarge";
    case Errc::NotUnique: return "NotUnique";
    case Errc::NotFound: return "NotFound";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace castle
