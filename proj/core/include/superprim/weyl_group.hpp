#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/dynamic_bitset.hpp>

#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"

namespace superprim {

/// Element of the even Weyl group, stored as one signed permutation of
/// all rank() coordinates: basis vector i is sent to
/// sign(images[i]) * basis vector |images[i]|-1. ε-coordinates never mix
/// with δ-coordinates, so this is the pair of signed permutations.
class WeylElement {
 public:
  using Images = boost::container::small_vector<std::int8_t, 16>;

  WeylElement() = default;
  explicit WeylElement(Images images) : images_(std::move(images)) {}
  static WeylElement identity(std::size_t rank);

  const Images& images() const noexcept { return images_; }
  std::size_t rank() const noexcept { return images_.size(); }
  bool is_identity() const noexcept;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }
  std::size_t hash() const noexcept;

 private:
  Images images_;
};

}  // namespace superprim

template <>
struct std::hash<superprim::WeylElement> {
  std::size_t operator()(const superprim::WeylElement& w) const noexcept {
    return w.hash();
  }
};

namespace superprim {

/// Simple-reflection indices (0-based, indexing RootSystem::simple_even()).
/// Letters are read left to right as a product s_{i1} s_{i2} ... s_{ik}.
struct ReducedWord {
  std::vector<int> letters;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

/// "s1.s3.s2" with 1-based indices; the empty word is "e".
std::string to_string(const ReducedWord& word);
/// Inverse of to_string(ReducedWord); throws MalformedWeightLiteral on bad input.
ReducedWord parse_word(std::string_view text);

enum class Side { left, right };

/// The Weyl group of the even part, as a Coxeter group on the simple
/// roots of Δ_0̄^+.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const noexcept { return rs_; }
  /// Number of simple reflections.
  std::size_t rank() const noexcept { return generators_.size(); }
  const WeylElement& generator(std::size_t s) const { return generators_.at(s); }
  std::vector<std::pair<Root, WeylElement>> simple_reflections() const;

  WeylElement identity() const { return WeylElement::identity(rs_.rank()); }
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  /// Evaluates the word as a product of generators.
  WeylElement from_word(const ReducedWord& word) const;

  Weight act(const WeylElement& w, const Weight& lambda) const;
  /// w(λ+ρ)-ρ.
  Weight dot_act(const WeylElement& w, const Weight& lambda) const;
  /// w(λ+ρ_0̄)-ρ_0̄.
  Weight circle_act(const WeylElement& w, const Weight& lambda) const;

  /// Number of positive even roots sent to negative roots.
  int length(const WeylElement& w) const;
  /// Lexicographically smallest reduced word.
  ReducedWord reduced_word(const WeylElement& w) const;
  /// Bit s is set when s is a descent on the given side.
  std::uint64_t descents(const WeylElement& w, Side side) const;
  bool is_descent(const WeylElement& w, std::size_t s, Side side) const;
  bool bruhat_leq(const WeylElement& x, const WeylElement& w) const;

  /// |W|, saturating at UINT64_MAX.
  std::uint64_t order() const noexcept;
  /// All elements, sorted by (length, reduced word). Throws GroupTooLarge
  /// when order() exceeds max_order.
  std::vector<WeylElement> enumerate(std::uint64_t max_order = kDefaultMaxOrder) const;

  static constexpr std::uint64_t kDefaultMaxOrder = 100000;

 private:
  struct SparseRoot {
    int a;
    int ca;
    int b;  // -1 when absent
    int cb;
  };
  bool sends_negative(const WeylElement& w, const SparseRoot& root) const;
  void require_rank(const WeylElement& w) const;

  RootSystem rs_;
  std::vector<WeylElement> generators_;
  std::vector<SparseRoot> positive_;
  std::vector<SparseRoot> simple_;
  std::vector<std::int64_t> height_;
};

/// Complete indexed list of W for groups of desk-scale size, with
/// multiplication tables by generators.
///
/// Indices follow enumerate(): index 0 is e and lengths are nondecreasing.
/// Immutable after construction except for the Bruhat ideals, which are
/// filled once on first request.
class ElementTable {
 public:
  using Index = std::uint32_t;

  explicit ElementTable(const WeylGroup& group,
                        std::uint64_t max_order = WeylGroup::kDefaultMaxOrder);

  const WeylGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t rank() const noexcept { return group_.rank(); }

  const WeylElement& element(Index i) const { return elements_.at(i); }
  const ReducedWord& word(Index i) const { return words_.at(i); }
  int length(Index i) const { return lengths_[i]; }
  Index index_of(const WeylElement& w) const;
  Index index_of(const ReducedWord& word) const;

  /// Index of s*w and w*s.
  Index left_mul(std::size_t s, Index w) const { return left_[s * size() + w]; }
  Index right_mul(std::size_t s, Index w) const { return right_[s * size() + w]; }
  Index inverse(Index w) const { return inverse_[w]; }
  Index longest() const noexcept { return static_cast<Index>(size() - 1); }

  bool is_left_descent(std::size_t s, Index w) const { return (left_desc_[w] >> s) & 1U; }
  bool is_right_descent(std::size_t s, Index w) const { return (right_desc_[w] >> s) & 1U; }
  std::uint64_t left_descents(Index w) const { return left_desc_[w]; }
  std::uint64_t right_descents(Index w) const { return right_desc_[w]; }
  /// Smallest s with s*w < w; requires w != e.
  std::size_t first_left_descent(Index w) const;

  bool bruhat_leq(Index x, Index w) const;
  /// {x : x <= w} as a bitset over indices; built for all w on first call.
  const boost::dynamic_bitset<>& bruhat_ideal(Index w) const;

 private:
  WeylGroup group_;
  std::vector<WeylElement> elements_;
  std::vector<ReducedWord> words_;
  std::vector<int> lengths_;
  std::vector<Index> left_;
  std::vector<Index> right_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> left_desc_;
  std::vector<std::uint64_t> right_desc_;
  std::unordered_map<WeylElement, Index> lookup_;

  mutable std::once_flag ideals_once_;
  mutable std::vector<boost::dynamic_bitset<>> ideals_;
};

}  // namespace superprim
