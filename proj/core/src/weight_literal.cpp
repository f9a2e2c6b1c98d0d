#include "superprim/weight_literal.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "superprim/error.hpp"

namespace superprim {

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
    throw Error(ErrorKind::MalformedWeightLiteral,
                "malformed weight literal '" + std::string(text_) + "' at offset " +
                    std::to_string(pos) + ": " + what,
                {}, pos);
  }

  void skip_spaces(std::size_t& pos) const {
    while (pos < text_.size() && text_[pos] == ' ') ++pos;
  }

  std::int64_t digits(std::size_t& pos) const {
    const std::size_t start = pos;
    std::int64_t value = 0;
    while (pos < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos]))) {
      const int digit = text_[pos] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail(start, "number too large");
      value = value * 10 + digit;
      ++pos;
    }
    if (pos == start) fail(pos, "expected a digit");
    return value;
  }

  Rational entry(std::size_t& pos) const {
    skip_spaces(pos);
    bool negative = false;
    if (pos < text_.size() && (text_[pos] == '-' || text_[pos] == '+')) {
      negative = text_[pos] == '-';
      ++pos;
    } else if (text_.substr(pos, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      negative = true;
      pos += 3;
    }
    const std::int64_t num = digits(pos);
    std::int64_t den = 1;
    if (pos < text_.size() && text_[pos] == '/') {
      ++pos;
      const std::size_t den_pos = pos;
      den = digits(pos);
      if (den == 0) fail(den_pos, "zero denominator");
    }
    skip_spaces(pos);
    return Rational(negative ? -num : num, den);
  }

  std::vector<Rational> block(std::size_t begin, std::size_t end, std::size_t expected,
                              const char* name) const {
    std::vector<Rational> out;
    std::size_t pos = begin;
    skip_spaces(pos);
    if (pos == end) {
      if (expected != 0) fail(pos, std::string("empty ") + name + "-block");
      return out;
    }
    while (true) {
      out.push_back(entry(pos));
      if (pos == end) break;
      if (text_[pos] != ',') fail(pos, "expected ',' or end of block");
      ++pos;
    }
    if (out.size() != expected) {
      fail(begin, std::string(name) + "-block has " + std::to_string(out.size()) +
                      " entries, expected " + std::to_string(expected));
    }
    return out;
  }

  Weight parse(std::size_t eps_rank, std::size_t delta_rank) const {
    const std::size_t bar = text_.find('|');
    if (bar != std::string_view::npos && text_.find('|', bar + 1) != std::string_view::npos) {
      fail(text_.find('|', bar + 1), "more than one '|'");
    }
    if (bar == std::string_view::npos) {
      if (delta_rank != 0) fail(text_.size(), "missing '|' and δ-block");
      const auto eps = block(0, text_.size(), eps_rank, "ε");
      return Weight(eps, {});
    }
    const auto eps = block(0, bar, eps_rank, "ε");
    const auto delta = block(bar + 1, text_.size(), delta_rank, "δ");
    return Weight(eps, delta);
  }

 private:
  std::string_view text_;
};

}  // namespace

Weight parse_weight(std::string_view literal, std::size_t eps_rank, std::size_t delta_rank) {
  return LiteralParser(literal).parse(eps_rank, delta_rank);
}

Weight parse_weight(std::string_view literal, const RootSystem& rs) {
  return parse_weight(literal, rs.eps_rank(), rs.delta_rank());
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.eps_rank(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  if (w.delta_rank() == 0) return out;
  out += '|';
  for (std::size_t j = 0; j < w.delta_rank(); ++j) {
    if (j) out += ',';
    out += to_string(w.delta(j));
  }
  return out;
}

}  // namespace superprim
