#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace castle {

enum class Errc {
  InvalidRank,
  WrongLength,
  BadSum,
  RepeatedResidueClass,
  RankMismatch,
  BadResidue,
  ImproperSet,
  WouldBeImproper,
  WouldBeEmpty,
  NotConnected,
  SizeTooSmall,
  IdentityInput,
  NotMaximal,
  InvalidCode,
  NotContained,
  DescentViolation,
  NotReduced,
  NotStandard,
  BoundExceeded,
  NotBounded,
  NotACore,
  SizeMismatch,
  IndexTooLarge,
  NotUnique,
  NotFound,
  Parse,
};

const char* errc_name(Errc code);

// All library failures are reported through this type; `code()` is the
// machine-checkable part, `what()` carries a human readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  // Offending index, when the error refers to a position in a word.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace castle
