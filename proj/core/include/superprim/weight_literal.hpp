#pragma once

#include <string>
#include <string_view>

#include "superprim/root_system.hpp"
#include "superprim/weight.hpp"

namespace superprim {

/// Parses `a_1,...,a_k|b_1,...,b_n`; entries are integers or p/q.
/// When delta_rank is 0 the `|` and the empty δ-block may be omitted.
/// Throws MalformedWeightLiteral carrying the byte offset of the problem.
Weight parse_weight(std::string_view literal, std::size_t eps_rank,
                    std::size_t delta_rank);
Weight parse_weight(std::string_view literal, const RootSystem& rs);

/// Inverse of parse_weight; canonical, locale independent.
std::string format_weight(const Weight& w);

}  // namespace superprim
