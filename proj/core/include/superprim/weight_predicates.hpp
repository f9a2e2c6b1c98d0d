#pragma once

#include <optional>
#include <vector>

#include "superprim/error.hpp"
#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"

namespace superprim {

/// The weight classes of a single weight, each with the roots that
/// violate it (empty when the flag is true).
struct WeightClassification {
  bool integral = false;
  bool regular = false;
  bool dominant = false;
  bool strongly_typical = false;
  bool generic = false;
  bool super_dominant = false;

  std::vector<Witness> integral_violations;
  std::vector<Witness> regular_violations;
  std::vector<Witness> dominant_violations;
  std::vector<Witness> strongly_typical_violations;
  std::vector<Witness> generic_violations;
};

/// integral: ⟨λ,α^∨⟩ ∈ ℤ for all α ∈ Δ_0̄^+.
/// regular: ⟨λ+ρ,α^∨⟩ ≠ 0 for all α ∈ Δ_0̄^+.
/// dominant: ⟨λ+ρ,α^∨⟩ ≥ 0 on the integral subsystem.
/// strongly_typical: ⟨λ+ρ,γ⟩ ≠ 0 for all odd roots γ.
/// generic: |⟨λ+ρ,α^∨⟩| > M_α for all α ∈ Δ_0̄^+, where M_α is the
/// root system's genericity margin or the caller's uniform margin.
WeightClassification classify(const RootSystem& rs, const Weight& lambda,
                              std::optional<Rational> margin = std::nullopt);

bool is_integral(const RootSystem& rs, const Weight& lambda);
bool is_generic(const RootSystem& rs, const Weight& lambda,
                std::optional<Rational> margin = std::nullopt);
bool is_strongly_typical(const RootSystem& rs, const Weight& lambda);

/// Throws NonIntegralWeight / NonGenericWeight with witnesses.
void require_integral(const RootSystem& rs, const Weight& lambda);
void require_generic(const RootSystem& rs, const Weight& lambda,
                     std::optional<Rational> margin = std::nullopt);

struct IntegralSubsystem {
  std::vector<Root> roots;
  std::vector<Root> simple_roots;
};

/// {α ∈ Δ_0̄^+ : ⟨λ,α^∨⟩ ∈ ℤ} and its indecomposable members.
IntegralSubsystem integral_subsystem(const RootSystem& rs, const Weight& lambda);

/// ν ≤ λ: λ-ν is a nonnegative integer combination of Δ^+ (both parities).
bool height_leq(const RootSystem& rs, const Weight& nu, const Weight& lambda);

/// L(λ) is s_α-free iff s_α·λ ≥ λ. Throws NotSimpleRoot unless α is a
/// simple root of Δ_0̄^+.
bool is_s_free(const RootSystem& rs, const Root& simple, const Weight& lambda);

struct ShiftSearch {
  /// d runs over 1, 2, 4, ... up to max_d.
  int max_d = 1024;
  /// Integer offsets of max-norm up to max_radius are tried at each d.
  int max_radius = 3;
};

/// An integral κ with ⟨κ+ρ_0̄,α^∨⟩ ∈ ℤ_{≥d} for all α ∈ Δ_0̄^+ (smallest d
/// in the search order) such that μ+κ is regular and strongly typical.
/// Throws SearchExhausted when the bounded search finds nothing.
Weight typicalizing_shift(const RootSystem& rs, const Weight& mu, ShiftSearch search = {});

}  // namespace superprim
