#include "superprim/restriction.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include <boost/multiprecision/cpp_int.hpp>

#include "superprim/error.hpp"
#include "superprim/star_action.hpp"
#include "superprim/weight_literal.hpp"
#include "superprim/weight_predicates.hpp"

namespace superprim {

namespace {

constexpr std::size_t kMaxSupport = 24;

std::vector<Witness> circle_violations(const RootSystem& rs, const Weight& kappa) {
  std::vector<Witness> out;
  const Weight shifted = kappa + rs.rho_even();
  for (std::size_t i = 0; i < rs.positive_even().size(); ++i) {
    const Rational p = inner(shifted, rs.even_coroots()[i]);
    if (p == 0 || (is_integer(p) && p < 0)) out.push_back({rs.positive_even()[i].vector, p});
  }
  return out;
}

}  // namespace

std::vector<RestrictionSummand> restriction_summands(const RootSystem& rs, const Weight& nu,
                                                     std::optional<Rational> margin) {
  require_generic(rs, nu, margin);
  const OddSupport support = odd_support(rs, nu);
  if (support.size() > kMaxSupport) {
    throw Error(ErrorKind::GroupTooLarge, "restriction has 2^" + std::to_string(support.size()) + " summands");
  }
  const auto& odd = rs.positive_odd();
  std::vector<RestrictionSummand> out;
  out.reserve(std::size_t{1} << support.size());
  out.push_back({nu, {}});
  // Each mask extends the mask without its highest bit by one root.
  for (std::uint32_t mask = 1; mask < (1U << support.size()); ++mask) {
    const auto top = static_cast<std::size_t>(std::bit_width(mask) - 1);
    RestrictionSummand summand = out[mask ^ (1U << top)];
    summand.weight -= odd[support.indices[top]].vector;
    summand.subset.push_back(support.indices[top]);
    out.push_back(std::move(summand));
  }
  return out;
}

ClassMultiset<Weight> penkov_restrict(const RootSystem& rs, const Weight& nu, std::optional<Rational> margin) {
  require_generic(rs, nu, margin);
  const OddSupport support = odd_support(rs, nu);
  if (support.size() > kMaxSupport) {
    throw Error(ErrorKind::GroupTooLarge, "restriction has 2^" + std::to_string(support.size()) + " summands");
  }
  const auto& odd = rs.positive_odd();
  // Translation preserves lexicographic order, so each root only needs a merge.
  std::vector<Weight> sorted = {nu};
  std::vector<Weight> shifted;
  std::vector<Weight> merged;
  for (auto k : support.indices) {
    shifted.clear();
    for (const auto& x : sorted) shifted.push_back(x - odd[k].vector);
    merged.clear();
    merged.reserve(2 * sorted.size());
    std::merge(std::make_move_iterator(shifted.begin()), std::make_move_iterator(shifted.end()),
               std::make_move_iterator(sorted.begin()), std::make_move_iterator(sorted.end()),
               std::back_inserter(merged));
    sorted.swap(merged);
  }
  return ClassMultiset<Weight>::from_labels(std::move(sorted));
}

bool is_circle_regular_dominant(const RootSystem& rs, const Weight& kappa) {
  rs.require_conformant(kappa);
  return circle_violations(rs, kappa).empty();
}

std::vector<Weight> dominant_restriction_set(const RootSystem& rs, const Weight& mu, std::optional<Rational> margin) {
  const auto restricted = penkov_restrict(rs, mu, margin);
  std::vector<Weight> out;
  for (const auto& [kappa, mult] : restricted.entries()) {
    auto witnesses = circle_violations(rs, kappa);
    if (!witnesses.empty()) {
      throw Error(ErrorKind::NotCircleDominant,
                  "restriction component " + format_weight(kappa) + " is not regular dominant for the even part",
                  std::move(witnesses));
    }
    out.push_back(kappa);
  }
  return out;
}

BigInt weyl_dim_even(const RootSystem& rs, const Weight& kappa) {
  require_integral(rs, kappa);
  auto witnesses = circle_violations(rs, kappa);
  if (!witnesses.empty()) {
    throw Error(ErrorKind::NotCircleDominant, format_weight(kappa) + " is not dominant for the even part",
                std::move(witnesses));
  }
  using boost::multiprecision::cpp_rational;
  cpp_rational product = 1;
  const Weight shifted = kappa + rs.rho_even();
  for (const auto& check : rs.even_coroots()) {
    const Rational top = inner(shifted, check);
    const Rational bottom = inner(rs.rho_even(), check);
    product *= cpp_rational(BigInt(top.numerator()), BigInt(top.denominator()));
    product /= cpp_rational(BigInt(bottom.numerator()), BigInt(bottom.denominator()));
  }
  if (boost::multiprecision::denominator(product) != 1) {
    throw std::logic_error("Weyl dimension is not an integer");
  }
  return boost::multiprecision::numerator(product);
}

}  // namespace superprim
