#include "superprim/root_system.hpp"

#include <sstream>
#include <unordered_set>

#include "superprim/error.hpp"

namespace superprim {

namespace {

constexpr int kMaxRank = 32;

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace

std::string_view to_string(Family family) noexcept {
  return family == Family::gl ? "gl" : "osp";
}

Family parse_family(std::string_view text) {
  if (text == "gl") return Family::gl;
  if (text == "osp") return Family::osp;
  throw Error(ErrorKind::UnsupportedFamily,
              "unsupported family '" + std::string(text) + "' (expected gl or osp)");
}

std::string RootSystem::name() const {
  std::ostringstream os;
  os << to_string(family_) << '(' << m_ << '|' << (family_ == Family::osp ? 2 * n_ : n_) << ')';
  return os.str();
}

void RootSystem::require_conformant(const Weight& w) const {
  if (!conforms(w)) {
    std::ostringstream os;
    os << "weight has shape (" << w.eps_rank() << '|' << w.delta_rank() << "), "
       << name() << " expects (" << eps_rank_ << '|' << delta_rank() << ')';
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

Rational RootSystem::pairing(const Weight& a, const Weight& b) const {
  require_conformant(a);
  require_conformant(b);
  return inner(a, b);
}

Weight RootSystem::coroot(const Root& alpha) const {
  const Rational self = pairing(alpha.vector, alpha.vector);
  if (self == 0) {
    throw Error(ErrorKind::IsotropicRoot, "isotropic root " + label(alpha.vector) + " has no coroot");
  }
  return Rational(2) / self * alpha.vector;
}

Weight RootSystem::reflect(const Root& alpha, const Weight& lambda) const {
  const Weight check = coroot(alpha);
  return lambda - pairing(lambda, check) * alpha.vector;
}

std::optional<std::size_t> RootSystem::odd_index(const Weight& vector) const {
  if (auto it = odd_lookup_.find(vector); it != odd_lookup_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::even_index(const Weight& vector) const {
  if (auto it = even_lookup_.find(vector); it != even_lookup_.end()) return it->second;
  return std::nullopt;
}

std::string RootSystem::label(const Weight& v) const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, char letter, std::size_t index) {
    if (c == 0) return;
    if (c < 0) os << '-';
    else if (!first) os << '+';
    const Rational a = abs(c);
    if (a != 1) os << to_string(a);
    os << letter << index + 1;
    first = false;
  };
  auto emit_eps = [&] {
    for (std::size_t i = 0; i < eps_rank_; ++i) emit(v.eps(i), 'e', i);
  };
  auto emit_delta = [&] {
    for (std::size_t j = 0; j < delta_rank(); ++j) emit(v.delta(j), 'd', j);
  };
  // osp odd roots read naturally δ-first ("d1-e1").
  if (family_ == Family::osp) {
    emit_delta();
    emit_eps();
  } else {
    emit_eps();
    emit_delta();
  }
  if (first) return "0";
  return os.str();
}

RootSystem build_root_system(Family family, int m, int n) {
  if (family == Family::gl) {
    if (m < 1 || n < 0 || m > kMaxRank || n > kMaxRank) {
      throw Error(ErrorKind::RankOutOfRange, "gl(m|n) needs 1 <= m <= 32 and 0 <= n <= 32");
    }
  } else if (family == Family::osp) {
    if (m < 1 || n < 1 || m > 2 * kMaxRank || n > kMaxRank) {
      throw Error(ErrorKind::RankOutOfRange, "osp(m|2n) needs 1 <= m <= 64 and 1 <= n <= 32");
    }
  } else {
    throw Error(ErrorKind::UnsupportedFamily, "unsupported family");
  }

  RootSystem rs;
  rs.family_ = family;
  rs.m_ = m;
  rs.n_ = n;
  rs.eps_rank_ = family == Family::gl ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m / 2);
  const std::size_t l = rs.eps_rank_;
  const std::size_t nn = static_cast<std::size_t>(n);

  auto e = [&](std::size_t i) { return rs.unit(i); };
  auto d = [&](std::size_t j) { return rs.unit(l + j); };
  auto even = [&](Weight v) { rs.pos_even_.push_back({Parity::even, std::move(v)}); };
  auto odd = [&](Weight v) { rs.pos_odd_.push_back({Parity::odd, std::move(v)}); };

  if (family == Family::gl) {
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) even(e(i) - e(j));
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = i + 1; j < nn; ++j) even(d(i) - d(j));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < nn; ++j) odd(e(i) - d(j));

    for (std::size_t i = 0; i + 1 < l; ++i) rs.simple_even_.push_back({Parity::even, e(i) - e(i + 1)});
    for (std::size_t j = 0; j + 1 < nn; ++j) rs.simple_even_.push_back({Parity::even, d(j) - d(j + 1)});
  } else {
    const bool odd_m = (m % 2) == 1;
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = i + 1; j < l; ++j) {
        even(e(i) - e(j));
        even(e(i) + e(j));
      }
      if (odd_m) even(e(i));
    }
    for (std::size_t i = 0; i < nn; ++i) {
      for (std::size_t j = i + 1; j < nn; ++j) {
        even(d(i) - d(j));
        even(d(i) + d(j));
      }
      even(Rational(2) * d(i));
    }
    for (std::size_t j = 0; j < nn; ++j) {
      if (odd_m) odd(d(j));
      for (std::size_t i = 0; i < l; ++i) {
        odd(d(j) - e(i));
        odd(d(j) + e(i));
      }
    }

    for (std::size_t i = 0; i + 1 < l; ++i) rs.simple_even_.push_back({Parity::even, e(i) - e(i + 1)});
    if (odd_m && l >= 1) rs.simple_even_.push_back({Parity::even, e(l - 1)});
    if (!odd_m && l >= 2) rs.simple_even_.push_back({Parity::even, e(l - 2) + e(l - 1)});
    for (std::size_t j = 0; j + 1 < nn; ++j) rs.simple_even_.push_back({Parity::even, d(j) - d(j + 1)});
    rs.long_delta_ = rs.simple_even_.size();
    rs.simple_even_.push_back({Parity::even, Rational(2) * d(nn - 1)});
  }

  for (std::size_t i = 0; i < rs.pos_even_.size(); ++i) rs.even_lookup_.emplace(rs.pos_even_[i].vector, i);
  for (std::size_t i = 0; i < rs.pos_odd_.size(); ++i) rs.odd_lookup_.emplace(rs.pos_odd_[i].vector, i);
  for (const auto& s : rs.simple_even_) rs.simple_even_pos_.push_back(rs.even_lookup_.at(s.vector));

  for (const auto& alpha : rs.pos_even_) rs.even_coroots_.push_back(rs.coroot(alpha));

  rs.rho_even_ = rs.zero();
  for (const auto& alpha : rs.pos_even_) rs.rho_even_ += alpha.vector;
  rs.rho_even_ *= Rational(1, 2);
  rs.rho_odd_ = rs.zero();
  for (const auto& gamma : rs.pos_odd_) rs.rho_odd_ += gamma.vector;
  rs.rho_odd_ *= Rational(1, 2);
  rs.rho_ = rs.rho_even_ - rs.rho_odd_;

  for (const auto& check : rs.even_coroots_) {
    Rational total = 0;
    for (const auto& gamma : rs.pos_odd_) total += abs(inner(gamma.vector, check));
    rs.margins_.push_back(total);
  }

  // Simple roots of Δ^+: positive roots that are not a sum of two positive roots.
  std::unordered_set<Weight> positive;
  std::vector<const Root*> all;
  for (const auto& r : rs.pos_even_) all.push_back(&r);
  for (const auto& r : rs.pos_odd_) all.push_back(&r);
  for (const auto* r : all) positive.insert(r->vector);
  for (const auto* r : all) {
    bool decomposable = false;
    for (const auto* a : all) {
      if (positive.contains(r->vector - a->vector)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rs.simple_positive_.push_back(*r);
  }
  return rs;
}

}  // namespace superprim
