#include "superprim/error.hpp"

namespace superprim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedWeightLiteral: return "MalformedWeightLiteral";
    case ErrorKind::IsotropicRoot: return "IsotropicRoot";
    case ErrorKind::NotSimpleRoot: return "NotSimpleRoot";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NonGenericWeight: return "NonGenericWeight";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::AmbiguousAtypicalRoot: return "AmbiguousAtypicalRoot";
    case ErrorKind::WordDependence: return "WordDependence";
    case ErrorKind::NotCircleDominant: return "NotCircleDominant";
    case ErrorKind::NoDominantRepresentative: return "NoDominantRepresentative";
    case ErrorKind::OrbitNotFree: return "OrbitNotFree";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<Witness> witnesses, std::optional<std::size_t> position)
    : std::runtime_error(message),
      kind_(kind),
      witnesses_(std::move(witnesses)),
      position_(position) {}

bool Error::is_usage_error() const noexcept {
  switch (kind_) {
    case ErrorKind::RankOutOfRange:
    case ErrorKind::UnsupportedFamily:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::MalformedWeightLiteral:
      return true;
    default:
      return false;
  }
}

}  // namespace superprim
