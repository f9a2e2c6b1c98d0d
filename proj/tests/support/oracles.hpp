#pragma once

// Independent reference computations used to cross-check the library.

#include <cstdint>
#include <vector>

#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"
#include "superprim/weyl_group.hpp"

namespace superprim::testing {

/// P_{x,w}(q) for all pairs, as coefficient lists (lowest degree first,
/// empty for the zero polynomial), computed by multiplying C'-basis
/// elements in the standard basis of the Hecke algebra and peeling off
/// canonical basis elements by bar-invariance.
/// Result is indexed [x][w] by ElementTable indices.
using PolynomialTable = std::vector<std::vector<std::vector<std::int64_t>>>;
PolynomialTable hecke_kl_oracle(const ElementTable& table);

/// Row-insertion tableaux of a permutation given in one-line notation
/// (values 1..n).
struct Tableaux {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
};
Tableaux rsk(const std::vector<int>& one_line);

/// One-line notation w(1), ..., w(n) of an element of S_n (gl(n|0)).
std::vector<int> one_line(const WeylElement& w);

/// Decides whether λ - ν is a nonnegative integer combination of
/// positive roots by exhaustive search, strictly decreasing a positive
/// linear functional.
bool brute_force_height_leq(const RootSystem& rs, const Weight& nu, const Weight& lambda);

/// Every reduced word of the element at the given index.
std::vector<ReducedWord> all_reduced_words(const ElementTable& table, ElementTable::Index w);

}  // namespace superprim::testing
