#include "superprim/hecke.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "superprim/error.hpp"

namespace superprim {

namespace {

using Coeffs = std::vector<std::int64_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// acc += factor * q^shift * p
void add_scaled(Coeffs& acc, const Coeffs& p, std::int64_t factor, std::size_t shift) {
  if (p.empty() || factor == 0) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(p[k], factor, &term) ||
        __builtin_add_overflow(acc[k + shift], term, &acc[k + shift])) {
      throw std::overflow_error("KL polynomial coefficient overflow");
    }
  }
}

}  // namespace

KLPolynomial::KLPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

std::int64_t KLPolynomial::at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

std::string to_string(const KLPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    std::int64_t c = p.coeffs()[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

KazhdanLusztig::KazhdanLusztig(std::shared_ptr<const ElementTable> table, std::size_t max_order)
    : table_(std::move(table)) {
  const std::size_t n = table_->size();
  if (n > max_order) {
    throw Error(ErrorKind::GroupTooLarge, "Weyl group of order " + std::to_string(n) +
                                              " exceeds the KL limit of " + std::to_string(max_order));
  }
  std::unordered_map<Coeffs, std::uint32_t, boost::hash<Coeffs>> lookup;
  auto intern = [&](Coeffs c) {
    trim(c);
    auto [it, inserted] = lookup.try_emplace(c, static_cast<std::uint32_t>(pool_.size()));
    if (inserted) pool_.emplace_back(std::move(c));
    return it->second;
  };
  intern({});
  const std::uint32_t one = intern({1});
  ids_.assign(n * n, 0);
  below_.assign(n, {});
  above_.assign(n, {});
  auto P = [&](Index x, Index w) -> const Coeffs& { return pool_[ids_[x * n + w]].coeffs(); };

  for (Index w = 0; w < n; ++w) {
    ids_[w * n + w] = one;
    if (w == 0) continue;
    const std::size_t s = table_->first_left_descent(w);
    const Index v = table_->left_mul(s, w);
    const int lw = table_->length(w);
    const auto& ideal = table_->bruhat_ideal(w);
    for (auto x = ideal.find_first(); x != boost::dynamic_bitset<>::npos; x = ideal.find_next(x)) {
      const auto xi = static_cast<Index>(x);
      if (xi == w) continue;
      const Index sx = table_->left_mul(s, xi);
      const std::size_t c = table_->is_left_descent(s, xi) ? 1 : 0;
      Coeffs acc;
      add_scaled(acc, P(sx, v), 1, 1 - c);
      add_scaled(acc, P(xi, v), 1, c);
      for (Index z : below_[v]) {
        if (!table_->is_left_descent(s, z)) continue;
        const Coeffs& pxz = P(xi, z);
        if (pxz.empty()) continue;
        const auto& pzv = P(z, v);
        const std::size_t top = static_cast<std::size_t>(table_->length(v) - table_->length(z) - 1) / 2;
        add_scaled(acc, pxz, -pzv[top], static_cast<std::size_t>(lw - table_->length(z)) / 2);
      }
      ids_[xi * n + w] = intern(std::move(acc));
    }
    for (auto x = ideal.find_first(); x != boost::dynamic_bitset<>::npos; x = ideal.find_next(x)) {
      const auto xi = static_cast<Index>(x);
      if (xi != w && mu(xi, w) != 0) {
        below_[w].push_back(xi);
        above_[xi].push_back(w);
      }
    }
  }
}

const KLPolynomial& KazhdanLusztig::polynomial(Index x, Index w) const { return pool_[ids_.at(x * size() + w)]; }

std::int64_t KazhdanLusztig::mu(Index x, Index w) const {
  const int gap = table_->length(w) - table_->length(x);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return polynomial(x, w).coefficient(static_cast<std::size_t>(gap - 1) / 2);
}

std::int64_t KazhdanLusztig::mu_tilde(Index x, Index y) const {
  const int lx = table_->length(x);
  const int ly = table_->length(y);
  if (lx == ly) return 0;
  return lx < ly ? mu(x, y) : mu(y, x);
}

std::vector<KazhdanLusztig::Index> KazhdanLusztig::left_successors(std::size_t s, Index x) const {
  if (table_->is_left_descent(s, x)) return {x};
  std::vector<Index> out{table_->left_mul(s, x)};
  for (Index z : below_[x]) {
    if (table_->is_left_descent(s, z)) out.push_back(z);
  }
  return out;
}

KazhdanLusztig::Relation KazhdanLusztig::closure(const std::vector<std::vector<Index>>& edges) const {
  const std::size_t n = size();
  Relation reach(n, boost::dynamic_bitset<>(n));
  std::vector<Index> stack;
  for (Index x = 0; x < n; ++x) {
    auto& seen = reach[x];
    seen.set(x);
    stack.assign(1, x);
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (Index y : edges[u]) {
        if (!seen.test(y)) {
          seen.set(y);
          stack.push_back(y);
        }
      }
    }
  }
  return reach;
}

void KazhdanLusztig::ensure_left() const {
  std::call_once(left_once_, [this] {
    const std::size_t n = size();
    std::vector<std::vector<Index>> edges(n);
    for (Index x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < table_->rank(); ++s) {
        for (Index y : left_successors(s, x)) {
          if (y != x) edges[x].push_back(y);
        }
      }
    }
    left_reach_ = closure(edges);
    cell_index_.assign(n, n);
    for (Index x = 0; x < n; ++x) {
      if (cell_index_[x] != n) continue;
      std::vector<Index> cell;
      for (Index y = x; y < n; ++y) {
        if (left_reach_[x].test(y) && left_reach_[y].test(x)) {
          cell.push_back(y);
          cell_index_[y] = cells_.size();
        }
      }
      cells_.push_back(std::move(cell));
    }
  });
}

bool KazhdanLusztig::left_leq(Index x, Index y) const {
  ensure_left();
  return left_reach_.at(x).test(y);
}

std::vector<LeftStep> KazhdanLusztig::left_chain(Index x, Index y) const {
  if (x == y || !left_leq(x, y)) return {};
  const std::size_t n = size();
  std::vector<LeftStep> parent(n, LeftStep{0, 0, 0});
  boost::dynamic_bitset<> seen(n);
  seen.set(x);
  std::deque<Index> queue{x};
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < table_->rank(); ++s) {
      for (Index v : left_successors(s, u)) {
        if (seen.test(v)) continue;
        seen.set(v);
        parent[v] = {u, s, v};
        if (v == y) {
          std::vector<LeftStep> chain;
          for (Index cur = y; cur != x; cur = parent[cur].from) chain.push_back(parent[cur]);
          return {chain.rbegin(), chain.rend()};
        }
        queue.push_back(v);
      }
    }
  }
  return {};
}

const std::vector<std::vector<KazhdanLusztig::Index>>& KazhdanLusztig::left_cells() const {
  ensure_left();
  return cells_;
}

std::size_t KazhdanLusztig::cell_of(Index x) const {
  ensure_left();
  return cell_index_.at(x);
}

SimpleClassMultiset KazhdanLusztig::twisted_simple_class(std::size_t s, Index x) const {
  SimpleClassMultiset out;
  if (!table_->is_left_descent(s, x)) return out;
  out.add(x, 1);
  for (const auto* partners : {&below_[x], &above_[x]}) {
    for (Index y : *partners) {
      if (!table_->is_left_descent(s, y)) out.add(y, mu_tilde(x, y));
    }
  }
  return out;
}

bool KazhdanLusztig::completed_kl_leq(Index x, Index y) const {
  std::call_once(completed_once_, [this] {
    std::vector<std::vector<Index>> edges(size());
    for (Index u = 0; u < size(); ++u) {
      for (std::size_t s = 0; s < table_->rank(); ++s) {
        const auto twisted = twisted_simple_class(s, u);
        for (const auto& [v, mult] : twisted.entries()) edges[u].push_back(v);
      }
    }
    completed_reach_ = closure(edges);
  });
  return completed_reach_.at(x).test(y);
}

bool KazhdanLusztig::kl_order_leq(Index x, Index y) const {
  std::call_once(order_once_, [this] {
    const std::size_t n = size();
    std::vector<std::vector<Index>> edges(n);
    for (Index u = 0; u < n; ++u) {
      for (Index v = 0; v < n; ++v) {
        if (mu_tilde(v, u) == 0) continue;
        // some s with s v > v and s u < u
        if ((table_->left_descents(u) & ~table_->left_descents(v)) != 0) edges[u].push_back(v);
      }
    }
    order_reach_ = closure(edges);
  });
  return order_reach_.at(x).test(y);
}

}  // namespace superprim
