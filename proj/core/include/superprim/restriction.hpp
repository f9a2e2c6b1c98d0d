#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superprim/class_multiset.hpp"
#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"

namespace superprim {

using BigInt = boost::multiprecision::cpp_int;

/// One even highest weight ν - |I| together with the subset I ⊆ S_ν
/// (ascending indices into positive_odd()).
struct RestrictionSummand {
  Weight weight;
  std::vector<std::size_t> subset;
};

/// All 2^|S_ν| summands, ordered by subset bitmask. Throws NonGenericWeight.
std::vector<RestrictionSummand> restriction_summands(const RootSystem& rs, const Weight& nu,
                                                     std::optional<Rational> margin = std::nullopt);

/// Even highest weights of the restriction of L(ν), with multiplicity.
ClassMultiset<Weight> penkov_restrict(const RootSystem& rs, const Weight& nu,
                                      std::optional<Rational> margin = std::nullopt);

/// ⟨κ+ρ_0̄,α^∨⟩ ≠ 0 for all even α, and > 0 wherever it is an integer.
bool is_circle_regular_dominant(const RootSystem& rs, const Weight& kappa);

/// The distinct summands of penkov_restrict(μ), sorted. Throws
/// NonGenericWeight, or NotCircleDominant if some member is not
/// ∘-regular and ∘-dominant.
std::vector<Weight> dominant_restriction_set(const RootSystem& rs, const Weight& mu,
                                             std::optional<Rational> margin = std::nullopt);

/// Weyl dimension formula for the even part. Throws NonIntegralWeight or
/// NotCircleDominant.
BigInt weyl_dim_even(const RootSystem& rs, const Weight& kappa);

}  // namespace superprim
