#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "superprim/class_multiset.hpp"
#include "superprim/weyl_group.hpp"

namespace superprim {

/// Integer polynomial in q, stored as coefficients of q^0, q^1, ... with no
/// trailing zeros (the zero polynomial is empty).
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<std::int64_t> coeffs);
  static KLPolynomial one() { return KLPolynomial({1}); }

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t at_one() const;

  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// "1 + 2q + q^2"; "0" for zero.
std::string to_string(const KLPolynomial& p);

using SimpleClassMultiset = ClassMultiset<ElementTable::Index>;

/// One step of a left-preorder chain: `to` occurs in C'_s C'_from.
struct LeftStep {
  ElementTable::Index from;
  std::size_t simple;
  ElementTable::Index to;
};

/// Kazhdan-Lusztig data for a finite Weyl group: all P_{x,w}, the
/// μ-coefficients, the left preorder and the two generated orders on
/// orbit labels of a regular integral block. Everything is computed once;
/// the object is immutable afterwards and safe to share across threads.
class KazhdanLusztig {
 public:
  using Index = ElementTable::Index;
  static constexpr std::size_t kDefaultMaxOrder = 2048;

  /// Throws GroupTooLarge when the table exceeds max_order.
  explicit KazhdanLusztig(std::shared_ptr<const ElementTable> table,
                          std::size_t max_order = kDefaultMaxOrder);

  const ElementTable& table() const noexcept { return *table_; }
  std::size_t size() const noexcept { return table_->size(); }

  const KLPolynomial& polynomial(Index x, Index w) const;
  std::int64_t mu(Index x, Index w) const;
  /// μ of the shorter against the longer element; 0 for equal lengths.
  std::int64_t mu_tilde(Index x, Index y) const;
  /// {z < w : μ(z,w) ≠ 0}.
  const std::vector<Index>& mu_partners(Index w) const { return below_[w]; }

  /// y with C'_y in C'_s C'_x, with multiplicity ignored.
  std::vector<Index> left_successors(std::size_t s, Index x) const;
  bool left_leq(Index x, Index y) const;
  /// Shortest chain x -> ... -> y of left steps; empty when x = y or not left_leq.
  std::vector<LeftStep> left_chain(Index x, Index y) const;
  /// Mutual-reachability classes, each sorted, ordered by smallest member.
  const std::vector<std::vector<Index>>& left_cells() const;
  std::size_t cell_of(Index x) const;

  /// Class of T_s L(x·λ) for λ dominant regular integral.
  SimpleClassMultiset twisted_simple_class(std::size_t s, Index x) const;
  bool completed_kl_leq(Index x, Index y) const;
  bool kl_order_leq(Index x, Index y) const;

 private:
  using Relation = std::vector<boost::dynamic_bitset<>>;
  Relation closure(const std::vector<std::vector<Index>>& edges) const;
  void ensure_left() const;

  std::shared_ptr<const ElementTable> table_;
  std::vector<KLPolynomial> pool_;
  std::vector<std::uint32_t> ids_;  // ids_[x * size + w] into pool_
  std::vector<std::vector<Index>> below_;
  std::vector<std::vector<Index>> above_;

  mutable std::once_flag left_once_;
  mutable Relation left_reach_;
  mutable std::vector<std::vector<Index>> cells_;
  mutable std::vector<std::size_t> cell_index_;

  mutable std::once_flag completed_once_;
  mutable Relation completed_reach_;
  mutable std::once_flag order_once_;
  mutable Relation order_reach_;
};

}  // namespace superprim
