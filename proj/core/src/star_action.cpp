#include "superprim/star_action.hpp"

#include <algorithm>
#include <unordered_set>

#include "superprim/error.hpp"
#include "superprim/weight_literal.hpp"
#include "superprim/weight_predicates.hpp"

namespace superprim {

namespace {

Weight star_step(const RootSystem& rs, std::size_t s, const Weight& nu) {
  const auto& simples = rs.simple_even();
  if (s >= simples.size()) {
    throw Error(ErrorKind::NotSimpleRoot, "no simple reflection s" + std::to_string(s + 1) + " in " + rs.name());
  }
  const Root& alpha = simples[s];
  const Weight shifted = nu + rs.rho();
  Weight out = rs.reflect(alpha, shifted) - rs.rho();
  if (rs.long_delta_simple() != s) return out;

  const Weight delta_n = rs.unit(rs.rank() - 1);
  const Root* atypical = nullptr;
  std::vector<Witness> hits;
  for (const auto& gamma : rs.positive_odd()) {
    if (rs.pairing(gamma.vector, delta_n) == 0) continue;
    if (rs.pairing(shifted, gamma.vector) != 0) continue;
    hits.push_back({gamma.vector, Rational(0)});
    atypical = &gamma;
  }
  if (hits.size() > 1) {
    throw Error(ErrorKind::AmbiguousAtypicalRoot,
                "several atypical odd roots meet " + rs.label(alpha.vector) + "; the weight is not generic",
                std::move(hits));
  }
  if (atypical) out += rs.reflect(alpha, atypical->vector);
  return out;
}

}  // namespace

bool OddSupport::contains(std::size_t odd_index) const {
  return std::binary_search(indices.begin(), indices.end(), odd_index);
}

OddSupport odd_support(const RootSystem& rs, const Weight& nu) {
  rs.require_conformant(nu);
  const Weight shifted = nu + rs.rho();
  OddSupport out;
  for (std::size_t k = 0; k < rs.positive_odd().size(); ++k) {
    if (rs.pairing(shifted, rs.positive_odd()[k].vector) != 0) out.indices.push_back(k);
  }
  return out;
}

Weight star_simple(const RootSystem& rs, std::size_t s, const Weight& nu, std::optional<Rational> margin) {
  require_generic(rs, nu, margin);
  return star_step(rs, s, nu);
}

Weight star_apply(const WeylGroup& group, const ReducedWord& word, const Weight& nu,
                  std::optional<Rational> margin) {
  const RootSystem& rs = group.root_system();
  require_generic(rs, nu, margin);
  Weight out = nu;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    out = star_step(rs, static_cast<std::size_t>(*it), out);
  }
  return out;
}

Weight star_apply(const WeylGroup& group, const WeylElement& w, const Weight& nu,
                  std::optional<Rational> margin) {
  return star_apply(group, group.reduced_word(w), nu, margin);
}

StarOrbit::StarOrbit(std::shared_ptr<const ElementTable> table, const Weight& nu,
                     std::optional<Rational> margin)
    : table_(std::move(table)) {
  const RootSystem& rs = table_->group().root_system();
  require_generic(rs, nu, margin);
  weights_.reserve(table_->size());
  weights_.push_back(nu);
  for (Index w = 1; w < table_->size(); ++w) {
    const std::size_t s = table_->first_left_descent(w);
    weights_.push_back(star_step(rs, s, weights_[table_->left_mul(s, w)]));
    // Every left descent gives a reduced word; all must agree.
    for (std::uint64_t d = table_->left_descents(w) & ~(std::uint64_t{1} << s); d != 0; d &= d - 1) {
      const auto t = static_cast<std::size_t>(__builtin_ctzll(d));
      const Weight other = star_step(rs, t, weights_[table_->left_mul(t, w)]);
      if (other != weights_.back()) {
        throw Error(ErrorKind::WordDependence,
                    "star action of " + to_string(table_->word(w)) + " depends on the reduced word: " +
                        format_weight(weights_.back()) + " vs " + format_weight(other));
      }
    }
  }
}

std::vector<StarOrbit::Index> StarOrbit::find(const Weight& weight) const {
  std::vector<Index> out;
  for (Index w = 0; w < weights_.size(); ++w) {
    if (weights_[w] == weight) out.push_back(w);
  }
  return out;
}

bool StarOrbit::is_free() const {
  std::unordered_set<Weight> seen(weights_.begin(), weights_.end());
  return seen.size() == weights_.size();
}

}  // namespace superprim
