#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superprim/weight.hpp"

namespace superprim {

enum class ErrorKind {
  RankOutOfRange,
  UnsupportedFamily,
  DimensionMismatch,
  MalformedWeightLiteral,
  IsotropicRoot,
  NotSimpleRoot,
  SearchExhausted,
  GroupTooLarge,
  NonGenericWeight,
  NonIntegralWeight,
  AmbiguousAtypicalRoot,
  WordDependence,
  NotCircleDominant,
  NoDominantRepresentative,
  OrbitNotFree,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// A root together with the pairing value that violated a predicate.
struct Witness {
  Weight root;
  Rational pairing;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<Witness> witnesses = {},
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }
  /// Byte offset into the offending literal, for MalformedWeightLiteral.
  std::optional<std::size_t> position() const noexcept { return position_; }

  /// Errors caused by how the tool was invoked rather than by the
  /// mathematics of the input (bad ranks, bad literals, shape mismatch).
  bool is_usage_error() const noexcept;

 private:
  ErrorKind kind_;
  std::vector<Witness> witnesses_;
  std::optional<std::size_t> position_;
};

}  // namespace superprim
