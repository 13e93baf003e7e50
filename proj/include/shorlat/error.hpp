#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shorlat {

enum class Errc {
  NotAUnit,
  ZeroVector,
  DegenerateLattice,
  InvalidParameter,
  OutOfRange,
  TooLarge,
  InvalidN,
  NotNMultiple,
  DivisionByZero,
  Exhausted,
  OrderOracleBudgetExceeded,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python module) can branch on it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace shorlat
