#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>
#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under
// C++20 reversed-operand rewriting; exact non-template overloads win
// overload resolution and sidestep it.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == a; }
}  // namespace boost

namespace superprim {

using Rational = boost::rational<std::int64_t>;

/// Canonical text form: "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// A vector of h^* written in the ε/δ basis.
///
/// The first eps_rank() coordinates are ε-coordinates, the remaining
/// delta_rank() are δ-coordinates. Values are exact rationals, held as
/// integer numerators over one positive common denominator; the
/// representation is kept reduced so equal weights compare equal
/// member-wise.
class Weight {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 8>;

  Weight() = default;
  /// The zero weight of the given shape.
  Weight(std::size_t eps_rank, std::size_t delta_rank);
  Weight(std::span<const Rational> eps, std::span<const Rational> delta);
  Weight(std::initializer_list<Rational> eps,
         std::initializer_list<Rational> delta);

  static Weight from_integers(std::size_t eps_rank,
                              std::span<const std::int64_t> coords);
  /// Basis vector ε_{index+1} (index < eps_rank) or δ_{index-eps_rank+1}.
  static Weight unit(std::size_t eps_rank, std::size_t delta_rank,
                     std::size_t index);

  std::size_t eps_rank() const noexcept { return eps_rank_; }
  std::size_t delta_rank() const noexcept { return num_.size() - eps_rank_; }
  std::size_t size() const noexcept { return num_.size(); }
  bool same_shape(const Weight& other) const noexcept {
    return eps_rank_ == other.eps_rank_ && num_.size() == other.num_.size();
  }

  Rational operator[](std::size_t i) const {
    return Rational(num_[i], den_);
  }
  Rational eps(std::size_t i) const { return (*this)[i]; }
  Rational delta(std::size_t j) const { return (*this)[eps_rank_ + j]; }

  std::int64_t numerator(std::size_t i) const noexcept { return num_[i]; }
  std::int64_t denominator() const noexcept { return den_; }
  const Storage& numerators() const noexcept { return num_; }

  bool is_zero() const noexcept;
  bool is_integer_vector() const noexcept { return den_ == 1; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic by coordinate value.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.den_ != b.den_ || a.eps_rank_ != b.eps_rank_ || a.num_.size() != b.num_.size()) {
      return compare_mixed(a, b);
    }
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] != b.num_[i]) return a.num_[i] <=> b.num_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept;

  /// Builds from raw numerators; the result is reduced.
  Weight(std::size_t eps_rank, Storage numerators, std::int64_t denominator);

  /// Signed coordinate permutation: coordinate i moves to slot
  /// |images[i]|-1 with the sign of images[i].
  template <class Images>
  Weight permuted(const Images& images) const {
    Weight out;
    out.eps_rank_ = eps_rank_;
    out.den_ = den_;
    out.num_.resize(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) {
      const auto image = images[i];
      const auto slot = static_cast<std::size_t>(image > 0 ? image : -image) - 1;
      out.num_[slot] = image > 0 ? num_[i] : -num_[i];
    }
    return out;
  }

 private:
  static std::strong_ordering compare_mixed(const Weight& a, const Weight& b);
  void normalize();
  void combine(const Weight& other, int sign);
  void require_same_shape(const Weight& other) const;

  Storage num_;
  std::int64_t den_ = 1;
  std::uint32_t eps_rank_ = 0;
};

/// Σ a_i b_i over ε-coordinates minus Σ a_j b_j over δ-coordinates.
Rational inner(const Weight& a, const Weight& b);

/// Plain Euclidean coordinate dot product (no signature).
Rational euclidean_dot(const Weight& a, const Weight& b);

}  // namespace superprim

template <>
struct std::hash<superprim::Weight> {
  std::size_t operator()(const superprim::Weight& w) const noexcept {
    return w.hash();
  }
};
