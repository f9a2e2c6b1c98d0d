#include "superprim/weight.hpp"

#include <numeric>
#include <sstream>

#include "superprim/error.hpp"

namespace superprim {

namespace {

__extension__ using Wide = __int128;

std::int64_t checked_narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("weight coordinate overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Weight::Weight(std::size_t eps_rank, std::size_t delta_rank)
    : num_(eps_rank + delta_rank, 0),
      eps_rank_(static_cast<std::uint32_t>(eps_rank)) {}

Weight::Weight(std::span<const Rational> eps, std::span<const Rational> delta)
    : eps_rank_(static_cast<std::uint32_t>(eps.size())) {
  std::int64_t lcm = 1;
  for (const auto& r : eps) lcm = std::lcm(lcm, r.denominator());
  for (const auto& r : delta) lcm = std::lcm(lcm, r.denominator());
  num_.reserve(eps.size() + delta.size());
  for (const auto& r : eps) num_.push_back(r.numerator() * (lcm / r.denominator()));
  for (const auto& r : delta) num_.push_back(r.numerator() * (lcm / r.denominator()));
  den_ = lcm;
  normalize();
}

Weight::Weight(std::initializer_list<Rational> eps,
               std::initializer_list<Rational> delta)
    : Weight(std::span<const Rational>(eps.begin(), eps.size()),
             std::span<const Rational>(delta.begin(), delta.size())) {}

Weight::Weight(std::size_t eps_rank, Storage numerators, std::int64_t denominator)
    : num_(std::move(numerators)),
      den_(denominator),
      eps_rank_(static_cast<std::uint32_t>(eps_rank)) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  normalize();
}

Weight Weight::from_integers(std::size_t eps_rank,
                             std::span<const std::int64_t> coords) {
  return Weight(eps_rank, Storage(coords.begin(), coords.end()), 1);
}

Weight Weight::unit(std::size_t eps_rank, std::size_t delta_rank,
                    std::size_t index) {
  Weight w(eps_rank, delta_rank);
  w.num_.at(index) = 1;
  return w;
}

bool Weight::is_zero() const noexcept {
  for (auto x : num_)
    if (x != 0) return false;
  return true;
}

void Weight::normalize() {
  std::int64_t g = den_;
  for (auto x : num_) {
    if (g == 1) break;
    g = std::gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : num_) x /= g;
    den_ /= g;
  }
}

void Weight::require_same_shape(const Weight& other) const {
  if (!same_shape(other)) {
    throw Error(ErrorKind::DimensionMismatch,
                "weights of different shape combined");
  }
}

Weight& Weight::operator+=(const Weight& other) {
  combine(other, 1);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  combine(other, -1);
  return *this;
}

void Weight::combine(const Weight& other, int sign) {
  require_same_shape(other);
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      const bool overflow = sign > 0 ? __builtin_add_overflow(num_[i], other.num_[i], &num_[i])
                                     : __builtin_sub_overflow(num_[i], other.num_[i], &num_[i]);
      if (overflow) throw std::overflow_error("weight coordinate overflows 64 bits");
    }
    if (den_ != 1) normalize();
    return;
  }
  const std::int64_t lcm = std::lcm(den_, other.den_);
  const std::int64_t a = lcm / den_;
  const std::int64_t b = sign * (lcm / other.den_);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    num_[i] = checked_narrow(static_cast<Wide>(num_[i]) * a +
                             static_cast<Wide>(other.num_[i]) * b);
  }
  den_ = lcm;
  normalize();
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : num_) x = checked_narrow(static_cast<Wide>(x) * c.numerator());
  den_ = checked_narrow(static_cast<Wide>(den_) * c.denominator());
  if (c.numerator() == 0) den_ = 1;
  normalize();
  return *this;
}

Weight operator-(Weight a) {
  for (auto& x : a.num_) x = -x;
  return a;
}

std::strong_ordering Weight::compare_mixed(const Weight& a, const Weight& b) {
  if (auto c = a.eps_rank_ <=> b.eps_rank_; c != 0) return c;
  if (auto c = a.num_.size() <=> b.num_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    const Wide lhs = static_cast<Wide>(a.num_[i]) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_[i]) * a.den_;
    if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Weight::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(den_) ^ (eps_rank_ * 0x9e3779b97f4a7c15ULL);
  for (auto x : num_) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Rational inner(const Weight& a, const Weight& b) {
  if (!a.same_shape(b)) {
    throw Error(ErrorKind::DimensionMismatch, "pairing of weights of different shape");
  }
  Wide acc = 0;
  const std::size_t m = a.eps_rank();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Wide term = static_cast<Wide>(a.numerator(i)) * b.numerator(i);
    acc += i < m ? term : -term;
  }
  const Wide den = static_cast<Wide>(a.denominator()) * b.denominator();
  if (den == 1) return Rational(checked_narrow(acc));
  return Rational(checked_narrow(acc), checked_narrow(den));
}

Rational euclidean_dot(const Weight& a, const Weight& b) {
  if (!a.same_shape(b)) {
    throw Error(ErrorKind::DimensionMismatch, "dot product of weights of different shape");
  }
  Wide acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<Wide>(a.numerator(i)) * b.numerator(i);
  }
  const Wide den = static_cast<Wide>(a.denominator()) * b.denominator();
  return Rational(checked_narrow(acc), checked_narrow(den));
}

}  // namespace superprim
