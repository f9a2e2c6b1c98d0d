#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "superprim/weight.hpp"

namespace superprim {

enum class Family { gl, osp };
enum class Parity { even, odd };

std::string_view to_string(Family family) noexcept;
/// Accepts "gl" or "osp"; throws UnsupportedFamily otherwise.
Family parse_family(std::string_view text);

struct Root {
  Parity parity;
  Weight vector;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Root datum of gl(m|n) with the distinguished Borel, or of osp(m|2n)
/// with the Borel whose odd positive roots are exactly the odd roots
/// with positive δ-part.
///
/// Coordinates: gl uses m ε's and n δ's; osp uses floor(m/2) ε's and
/// n δ's. The form is ⟨ε_i,ε_j⟩ = δ_ij, ⟨δ_i,δ_j⟩ = -δ_ij, ⟨ε,δ⟩ = 0.
/// Immutable once built.
class RootSystem {
 public:
  Family family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t eps_rank() const noexcept { return eps_rank_; }
  std::size_t delta_rank() const noexcept { return static_cast<std::size_t>(n_); }
  std::size_t rank() const noexcept { return eps_rank_ + delta_rank(); }

  /// "gl(2|1)", "osp(3|2)" (osp shows 2n).
  std::string name() const;

  const std::vector<Root>& positive_even() const noexcept { return pos_even_; }
  const std::vector<Root>& positive_odd() const noexcept { return pos_odd_; }
  /// Coroots of positive_even(), same order.
  const std::vector<Weight>& even_coroots() const noexcept { return even_coroots_; }

  /// Simple roots of Δ_0̄^+, in generator order (ε-chain first).
  const std::vector<Root>& simple_even() const noexcept { return simple_even_; }
  /// Index in positive_even() of each simple_even() root.
  std::size_t simple_even_position(std::size_t s) const { return simple_even_pos_.at(s); }
  /// Simple roots of the full positive system Δ^+ (indecomposable elements).
  const std::vector<Root>& simple_positive() const noexcept { return simple_positive_; }

  /// The generator s_{2δ_n} of osp, if this is an osp system.
  std::optional<std::size_t> long_delta_simple() const noexcept { return long_delta_; }

  const Weight& rho_even() const noexcept { return rho_even_; }
  const Weight& rho_odd() const noexcept { return rho_odd_; }
  const Weight& rho() const noexcept { return rho_; }

  Weight zero() const { return Weight(eps_rank_, delta_rank()); }
  Weight unit(std::size_t index) const { return Weight::unit(eps_rank_, delta_rank(), index); }
  bool conforms(const Weight& w) const noexcept {
    return w.eps_rank() == eps_rank_ && w.delta_rank() == delta_rank();
  }
  /// Throws DimensionMismatch unless w has this system's shape.
  void require_conformant(const Weight& w) const;

  Rational pairing(const Weight& a, const Weight& b) const;
  /// 2α/⟨α,α⟩; throws IsotropicRoot when ⟨α,α⟩ = 0.
  Weight coroot(const Root& alpha) const;
  /// λ - ⟨λ,α^∨⟩α; throws IsotropicRoot when ⟨α,α⟩ = 0.
  Weight reflect(const Root& alpha, const Weight& lambda) const;

  /// Position of the given vector in positive_odd(), if it is one.
  std::optional<std::size_t> odd_index(const Weight& vector) const;
  std::optional<std::size_t> even_index(const Weight& vector) const;

  /// Human-readable label such as "e1-e2", "d1+e1", "2d1".
  std::string label(const Weight& root_vector) const;

  /// Σ_{γ∈Δ_1̄^+} |⟨γ,α^∨⟩| for the i-th positive even root.
  const Rational& genericity_margin(std::size_t even_index) const {
    return margins_.at(even_index);
  }

 private:
  friend RootSystem build_root_system(Family family, int m, int n);
  RootSystem() = default;

  Family family_ = Family::gl;
  int m_ = 0;
  int n_ = 0;
  std::size_t eps_rank_ = 0;
  std::vector<Root> pos_even_;
  std::vector<Root> pos_odd_;
  std::vector<Weight> even_coroots_;
  std::vector<Root> simple_even_;
  std::vector<std::size_t> simple_even_pos_;
  std::vector<Root> simple_positive_;
  std::optional<std::size_t> long_delta_;
  Weight rho_even_;
  Weight rho_odd_;
  Weight rho_;
  std::vector<Rational> margins_;
  std::unordered_map<Weight, std::size_t> odd_lookup_;
  std::unordered_map<Weight, std::size_t> even_lookup_;
};

/// gl: m >= 1, n >= 0. osp: m >= 1, n >= 1. Throws RankOutOfRange.
RootSystem build_root_system(Family family, int m, int n);

}  // namespace superprim
