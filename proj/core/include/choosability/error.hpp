#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace choosability {

enum class Errc {
  InvalidArgument,
  NotPrimePower,
  DivisionByZero,
  ZeroHasNoOrder,
  OrderUnavailable,
  ZeroPair,
  AdmissibilityViolated,
  ColorOutOfRange,
  DegenerateDenominator,
  SearchTooLarge,
  MalformedInput,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace choosability
