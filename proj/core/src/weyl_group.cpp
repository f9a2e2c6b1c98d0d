#include "superprim/weyl_group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "superprim/error.hpp"

namespace superprim {

namespace {

constexpr std::size_t kMaxIdealTable = 16384;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out = saturating_mul(out, i);
  return out;
}

std::uint64_t hyperoctahedral(std::uint64_t k) {
  std::uint64_t out = factorial(k);
  for (std::uint64_t i = 0; i < k; ++i) out = saturating_mul(out, 2);
  return out;
}

int image_sign(int image) { return image > 0 ? 1 : -1; }
int image_slot(int image) { return (image > 0 ? image : -image) - 1; }

}  // namespace

WeylElement WeylElement::identity(std::size_t rank) {
  Images images(rank);
  for (std::size_t i = 0; i < rank; ++i) images[i] = static_cast<std::int8_t>(i + 1);
  return WeylElement(std::move(images));
}

bool WeylElement::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<std::int8_t>(i + 1)) return false;
  }
  return true;
}

std::size_t WeylElement::hash() const noexcept {
  return boost::hash_range(images_.begin(), images_.end());
}

std::string to_string(const ReducedWord& word) {
  if (word.letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += '.';
    out += 's';
    out += std::to_string(word.letters[i] + 1);
  }
  return out;
}

ReducedWord parse_word(std::string_view text) {
  ReducedWord word;
  if (text == "e") return word;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::MalformedWeightLiteral,
                "malformed word '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + what,
                {}, pos);
  };
  while (true) {
    if (pos >= text.size() || text[pos] != 's') fail("expected 's'");
    ++pos;
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000) fail("index too large");
      ++pos;
    }
    if (pos == start || value == 0) fail("expected a positive index");
    word.letters.push_back(value - 1);
    if (pos == text.size()) break;
    if (text[pos] != '.') fail("expected '.'");
    ++pos;
  }
  return word;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
  const std::size_t rank = rs_.rank();
  auto sparse = [&](const Weight& v) {
    SparseRoot r{-1, 0, -1, 0};
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const int c = static_cast<int>(boost::rational_cast<std::int64_t>(v[i]));
      if (r.a < 0) {
        r.a = static_cast<int>(i);
        r.ca = c;
      } else {
        r.b = static_cast<int>(i);
        r.cb = c;
      }
    }
    return r;
  };
  for (const auto& alpha : rs_.positive_even()) positive_.push_back(sparse(alpha.vector));
  for (const auto& alpha : rs_.simple_even()) {
    simple_.push_back(sparse(alpha.vector));
    WeylElement::Images images(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      const Weight image = rs_.reflect(alpha, rs_.unit(i));
      for (std::size_t j = 0; j < rank; ++j) {
        if (image[j] != 0) {
          images[i] = static_cast<std::int8_t>(image[j] > 0 ? static_cast<int>(j + 1) : -static_cast<int>(j + 1));
        }
      }
    }
    generators_.emplace_back(std::move(images));
  }
  const Weight two_rho = Rational(2) * rs_.rho_even();
  for (std::size_t i = 0; i < rank; ++i) height_.push_back(two_rho.numerator(i));
}

std::vector<std::pair<Root, WeylElement>> WeylGroup::simple_reflections() const {
  std::vector<std::pair<Root, WeylElement>> out;
  for (std::size_t s = 0; s < rank(); ++s) out.emplace_back(rs_.simple_even()[s], generators_[s]);
  return out;
}

void WeylGroup::require_rank(const WeylElement& w) const {
  if (w.rank() != rs_.rank()) {
    throw Error(ErrorKind::DimensionMismatch,
                "Weyl element of rank " + std::to_string(w.rank()) + " used with " + rs_.name());
  }
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  require_rank(a);
  require_rank(b);
  const auto& pa = a.images();
  const auto& pb = b.images();
  WeylElement::Images out(pa.size());
  for (std::size_t i = 0; i < pb.size(); ++i) {
    out[i] = static_cast<std::int8_t>(image_sign(pb[i]) * pa[image_slot(pb[i])]);
  }
  return WeylElement(std::move(out));
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  require_rank(w);
  const auto& p = w.images();
  WeylElement::Images out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[image_slot(p[i])] = static_cast<std::int8_t>(image_sign(p[i]) * static_cast<int>(i + 1));
  }
  return WeylElement(std::move(out));
}

WeylElement WeylGroup::from_word(const ReducedWord& word) const {
  WeylElement w = identity();
  for (const int s : word.letters) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank()) {
      throw Error(ErrorKind::NotSimpleRoot,
                  "generator s" + std::to_string(s + 1) + " does not exist in the Weyl group of " + rs_.name());
    }
    w = multiply(w, generators_[static_cast<std::size_t>(s)]);
  }
  return w;
}

Weight WeylGroup::act(const WeylElement& w, const Weight& lambda) const {
  require_rank(w);
  rs_.require_conformant(lambda);
  return lambda.permuted(w.images());
}

Weight WeylGroup::dot_act(const WeylElement& w, const Weight& lambda) const {
  return act(w, lambda + rs_.rho()) - rs_.rho();
}

Weight WeylGroup::circle_act(const WeylElement& w, const Weight& lambda) const {
  return act(w, lambda + rs_.rho_even()) - rs_.rho_even();
}

bool WeylGroup::sends_negative(const WeylElement& w, const SparseRoot& root) const {
  const auto& p = w.images();
  std::int64_t value = root.ca * image_sign(p[root.a]) * height_[image_slot(p[root.a])];
  if (root.b >= 0) value += root.cb * image_sign(p[root.b]) * height_[image_slot(p[root.b])];
  return value < 0;
}

int WeylGroup::length(const WeylElement& w) const {
  require_rank(w);
  int count = 0;
  for (const auto& root : positive_) count += sends_negative(w, root) ? 1 : 0;
  return count;
}

bool WeylGroup::is_descent(const WeylElement& w, std::size_t s, Side side) const {
  if (side == Side::right) return sends_negative(w, simple_.at(s));
  return sends_negative(inverse(w), simple_.at(s));
}

std::uint64_t WeylGroup::descents(const WeylElement& w, Side side) const {
  require_rank(w);
  const WeylElement target = side == Side::right ? w : inverse(w);
  std::uint64_t mask = 0;
  for (std::size_t s = 0; s < rank(); ++s) {
    if (sends_negative(target, simple_[s])) mask |= std::uint64_t{1} << s;
  }
  return mask;
}

ReducedWord WeylGroup::reduced_word(const WeylElement& w) const {
  ReducedWord word;
  WeylElement current = w;
  while (true) {
    const std::uint64_t mask = descents(current, Side::left);
    if (mask == 0) break;
    const int s = std::countr_zero(mask);
    word.letters.push_back(s);
    current = multiply(generators_[static_cast<std::size_t>(s)], current);
  }
  return word;
}

bool WeylGroup::bruhat_leq(const WeylElement& x, const WeylElement& w) const {
  WeylElement a = x;
  WeylElement b = w;
  int la = length(a);
  int lb = length(b);
  while (true) {
    if (la > lb) return false;
    if (la == lb) return a == b;
    if (la == 0) return true;
    const std::uint64_t mask = descents(b, Side::left);
    const auto s = static_cast<std::size_t>(std::countr_zero(mask));
    if (is_descent(a, s, Side::left)) {
      a = multiply(generators_[s], a);
      --la;
    }
    b = multiply(generators_[s], b);
    --lb;
  }
}

std::uint64_t WeylGroup::order() const noexcept {
  const auto m = static_cast<std::uint64_t>(rs_.m());
  const auto n = static_cast<std::uint64_t>(rs_.n());
  if (rs_.family() == Family::gl) return saturating_mul(factorial(m), factorial(n));
  const std::uint64_t l = rs_.eps_rank();
  std::uint64_t eps_part = 1;
  if (m % 2 == 1) {
    eps_part = hyperoctahedral(l);
  } else if (l >= 2) {
    eps_part = hyperoctahedral(l) / 2;
  }
  return saturating_mul(eps_part, hyperoctahedral(n));
}

std::vector<WeylElement> WeylGroup::enumerate(std::uint64_t max_order) const {
  const std::uint64_t expected = order();
  if (expected > max_order) {
    throw Error(ErrorKind::GroupTooLarge,
                "Weyl group of " + rs_.name() + " has " +
                    (expected == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                           : std::to_string(expected)) +
                    " elements, above the bound " + std::to_string(max_order));
  }
  std::unordered_set<WeylElement> seen{identity()};
  std::vector<WeylElement> out{identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      WeylElement next = multiply(g, out[head]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  std::vector<std::pair<int, ReducedWord>> keys;
  keys.reserve(out.size());
  for (const auto& w : out) keys.emplace_back(length(w), reduced_word(w));
  std::vector<std::size_t> order_index(out.size());
  std::iota(order_index.begin(), order_index.end(), std::size_t{0});
  std::sort(order_index.begin(), order_index.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<WeylElement> sorted;
  sorted.reserve(out.size());
  for (const std::size_t i : order_index) sorted.push_back(std::move(out[i]));
  return sorted;
}

ElementTable::ElementTable(const WeylGroup& group, std::uint64_t max_order)
    : group_(group), elements_(group_.enumerate(max_order)) {
  const std::size_t n = elements_.size();
  const std::size_t r = group_.rank();
  lookup_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) lookup_.emplace(elements_[i], static_cast<Index>(i));
  words_.reserve(n);
  lengths_.reserve(n);
  for (const auto& w : elements_) {
    words_.push_back(group_.reduced_word(w));
    lengths_.push_back(static_cast<int>(words_.back().letters.size()));
  }
  left_.resize(r * n);
  right_.resize(r * n);
  left_desc_.assign(n, 0);
  right_desc_.assign(n, 0);
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = lookup_.at(group_.inverse(elements_[i]));
    for (std::size_t s = 0; s < r; ++s) {
      const Index l = lookup_.at(group_.multiply(group_.generator(s), elements_[i]));
      const Index rr = lookup_.at(group_.multiply(elements_[i], group_.generator(s)));
      left_[s * n + i] = l;
      right_[s * n + i] = rr;
      if (lengths_[l] < lengths_[i]) left_desc_[i] |= std::uint64_t{1} << s;
      if (lengths_[rr] < lengths_[i]) right_desc_[i] |= std::uint64_t{1} << s;
    }
  }
}

ElementTable::Index ElementTable::index_of(const WeylElement& w) const {
  if (auto it = lookup_.find(w); it != lookup_.end()) return it->second;
  throw Error(ErrorKind::DimensionMismatch, "element does not belong to the Weyl group of " +
                                                group_.root_system().name());
}

ElementTable::Index ElementTable::index_of(const ReducedWord& word) const {
  return index_of(group_.from_word(word));
}

std::size_t ElementTable::first_left_descent(Index w) const {
  return static_cast<std::size_t>(std::countr_zero(left_desc_[w]));
}

bool ElementTable::bruhat_leq(Index x, Index w) const {
  while (true) {
    if (lengths_[x] > lengths_[w]) return false;
    if (lengths_[x] == lengths_[w]) return x == w;
    if (x == 0) return true;
    const std::size_t s = first_left_descent(w);
    if (is_left_descent(s, x)) x = left_mul(s, x);
    w = left_mul(s, w);
  }
}

const boost::dynamic_bitset<>& ElementTable::bruhat_ideal(Index w) const {
  std::call_once(ideals_once_, [this] {
    const std::size_t n = size();
    if (n > kMaxIdealTable) {
      throw Error(ErrorKind::GroupTooLarge, "Bruhat interval table needs |W| <= " +
                                                std::to_string(kMaxIdealTable));
    }
    std::vector<boost::dynamic_bitset<>> ideals(n, boost::dynamic_bitset<>(n));
    ideals[0].set(0);
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t s = first_left_descent(static_cast<Index>(i));
      const Index v = left_mul(s, static_cast<Index>(i));
      auto& ideal = ideals[i];
      ideal = ideals[v];
      for (auto x = ideals[v].find_first(); x != boost::dynamic_bitset<>::npos; x = ideals[v].find_next(x)) {
        ideal.set(left_mul(s, static_cast<Index>(x)));
      }
    }
    ideals_ = std::move(ideals);
  });
  return ideals_.at(w);
}

}  // namespace superprim
