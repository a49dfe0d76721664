#include "choosability/error.hpp"

namespace choosability {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroHasNoOrder: return "ZeroHasNoOrder";
    case Errc::OrderUnavailable: return "OrderUnavailable";
    case Errc::ZeroPair: return "ZeroPair";
    case Errc::AdmissibilityViolated: return "AdmissibilityViolated";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace choosability
