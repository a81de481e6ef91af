#pragma once

#include <stdexcept>
#include <string>

namespace rainbowdom {

enum class ErrorCode {
  IndexOutOfRange,
  LoopEdge,
  MalformedGraph6,
  MalformedInput,
  TooSmall,
  TooLarge,
  CapacityExceeded,
  BudgetExceeded,
  IsolatedVertex,
  NotValidRdf,
  NotDominating,
  NotDisjoint,
  NotDominatingCouple,
  HTooSmall,
  NoPairWitness,
  NoUniversalVertex,
  Disconnected,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rainbowdom
