#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"
#include "superprim/weyl_group.hpp"

namespace superprim {

/// S_ν = {γ ∈ Δ_1̄^+ : ⟨ν+ρ,γ⟩ ≠ 0}, as ascending indices into positive_odd().
struct OddSupport {
  std::vector<std::size_t> indices;

  std::size_t size() const noexcept { return indices.size(); }
  bool contains(std::size_t odd_index) const;
  friend bool operator==(const OddSupport&, const OddSupport&) = default;
};

OddSupport odd_support(const RootSystem& rs, const Weight& nu);

/// s∗ν for the simple reflection with index s (position in simple_even()).
/// Equals the dot action except for s_{2δ_n} on osp, where an atypical odd
/// root γ with ⟨γ,δ_n⟩ ≠ 0 shifts the result by s(γ).
/// Throws NonGenericWeight, NotSimpleRoot, AmbiguousAtypicalRoot.
Weight star_simple(const RootSystem& rs, std::size_t s, const Weight& nu,
                   std::optional<Rational> margin = std::nullopt);

/// Evaluates the word right to left through star_simple.
Weight star_apply(const WeylGroup& group, const ReducedWord& word, const Weight& nu,
                  std::optional<Rational> margin = std::nullopt);
/// Uses the lexicographically smallest reduced word of w.
Weight star_apply(const WeylGroup& group, const WeylElement& w, const Weight& nu,
                  std::optional<Rational> margin = std::nullopt);

/// w∗ν for every w in the table, indexed like the table.
class StarOrbit {
 public:
  using Index = ElementTable::Index;

  /// Checks genericity of ν only; every reduced word of every element is
  /// verified to give the same weight (WordDependence otherwise).
  StarOrbit(std::shared_ptr<const ElementTable> table, const Weight& nu,
            std::optional<Rational> margin = std::nullopt);

  const ElementTable& table() const noexcept { return *table_; }
  const std::shared_ptr<const ElementTable>& shared_table() const noexcept { return table_; }
  const Weight& base() const { return weights_.front(); }
  const Weight& operator[](Index w) const { return weights_.at(w); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  /// Elements w with w∗ν equal to the given weight.
  std::vector<Index> find(const Weight& weight) const;
  bool is_free() const;

 private:
  std::shared_ptr<const ElementTable> table_;
  std::vector<Weight> weights_;
};

}  // namespace superprim
