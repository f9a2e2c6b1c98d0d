#include "superprim/weight_predicates.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace superprim {

namespace {

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

std::string describe(const RootSystem& rs, const std::vector<Witness>& witnesses) {
  std::ostringstream os;
  for (std::size_t i = 0; i < witnesses.size() && i < 4; ++i) {
    os << (i ? ", " : "") << rs.label(witnesses[i].root) << " -> " << to_string(witnesses[i].pairing);
  }
  if (witnesses.size() > 4) os << ", ...";
  return os.str();
}

std::vector<Witness> integral_violations(const RootSystem& rs, const Weight& lambda) {
  std::vector<Witness> out;
  for (std::size_t i = 0; i < rs.positive_even().size(); ++i) {
    const Rational p = inner(lambda, rs.even_coroots()[i]);
    if (!is_integer(p)) out.push_back({rs.positive_even()[i].vector, p});
  }
  return out;
}

std::vector<Witness> generic_violations(const RootSystem& rs, const Weight& lambda,
                                        const std::optional<Rational>& margin, bool first_only) {
  std::vector<Witness> out;
  const Weight shifted = lambda + rs.rho();
  for (std::size_t i = 0; i < rs.positive_even().size(); ++i) {
    const Rational p = inner(shifted, rs.even_coroots()[i]);
    const Rational bound = margin ? *margin : rs.genericity_margin(i);
    if (abs(p) <= bound) {
      out.push_back({rs.positive_even()[i].vector, p});
      if (first_only) break;
    }
  }
  return out;
}

bool regular_strongly_typical(const RootSystem& rs, const Weight& lambda) {
  const Weight shifted = lambda + rs.rho();
  for (const auto& check : rs.even_coroots()) {
    if (inner(shifted, check) == 0) return false;
  }
  for (const auto& gamma : rs.positive_odd()) {
    if (inner(shifted, gamma.vector) == 0) return false;
  }
  return true;
}

// Solves Σ c_i columns[i] = target exactly; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const std::vector<Weight>& columns, const Weight& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = columns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = columns[c][r];
    a[r][cols] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (a[r][cols] != 0) return std::nullopt;
  }
  if (pivot_col.size() != cols) {
    throw std::logic_error("simple roots of the positive system are linearly dependent");
  }
  std::vector<Rational> out(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out[pivot_col[r]] = a[r][cols];
  return out;
}

}  // namespace

bool is_integral(const RootSystem& rs, const Weight& lambda) {
  rs.require_conformant(lambda);
  for (const auto& check : rs.even_coroots()) {
    if (!is_integer(inner(lambda, check))) return false;
  }
  return true;
}

bool is_generic(const RootSystem& rs, const Weight& lambda, std::optional<Rational> margin) {
  rs.require_conformant(lambda);
  return generic_violations(rs, lambda, margin, true).empty();
}

bool is_strongly_typical(const RootSystem& rs, const Weight& lambda) {
  rs.require_conformant(lambda);
  const Weight shifted = lambda + rs.rho();
  for (const auto& gamma : rs.positive_odd()) {
    if (inner(shifted, gamma.vector) == 0) return false;
  }
  return true;
}

void require_integral(const RootSystem& rs, const Weight& lambda) {
  rs.require_conformant(lambda);
  auto witnesses = integral_violations(rs, lambda);
  if (!witnesses.empty()) {
    const std::string message = "weight is not integral: " + describe(rs, witnesses);
    throw Error(ErrorKind::NonIntegralWeight, message, std::move(witnesses));
  }
}

void require_generic(const RootSystem& rs, const Weight& lambda, std::optional<Rational> margin) {
  rs.require_conformant(lambda);
  auto witnesses = generic_violations(rs, lambda, margin, false);
  if (!witnesses.empty()) {
    const std::string message = "weight is not generic (|<lambda+rho, coroot>| within the margin): " +
                                describe(rs, witnesses);
    throw Error(ErrorKind::NonGenericWeight, message, std::move(witnesses));
  }
}

WeightClassification classify(const RootSystem& rs, const Weight& lambda, std::optional<Rational> margin) {
  rs.require_conformant(lambda);
  WeightClassification c;
  const Weight shifted = lambda + rs.rho();
  c.integral_violations = integral_violations(rs, lambda);
  for (std::size_t i = 0; i < rs.positive_even().size(); ++i) {
    const Weight& root = rs.positive_even()[i].vector;
    const Rational p = inner(shifted, rs.even_coroots()[i]);
    if (p == 0) c.regular_violations.push_back({root, p});
    if (p < 0 && is_integer(inner(lambda, rs.even_coroots()[i]))) c.dominant_violations.push_back({root, p});
  }
  for (const auto& gamma : rs.positive_odd()) {
    const Rational p = inner(shifted, gamma.vector);
    if (p == 0) c.strongly_typical_violations.push_back({gamma.vector, p});
  }
  c.generic_violations = generic_violations(rs, lambda, margin, false);
  c.integral = c.integral_violations.empty();
  c.regular = c.regular_violations.empty();
  c.dominant = c.dominant_violations.empty();
  c.strongly_typical = c.strongly_typical_violations.empty();
  c.generic = c.generic_violations.empty();
  c.super_dominant = c.regular && c.strongly_typical && c.dominant;
  return c;
}

IntegralSubsystem integral_subsystem(const RootSystem& rs, const Weight& lambda) {
  rs.require_conformant(lambda);
  IntegralSubsystem sub;
  for (std::size_t i = 0; i < rs.positive_even().size(); ++i) {
    if (is_integer(inner(lambda, rs.even_coroots()[i]))) sub.roots.push_back(rs.positive_even()[i]);
  }
  std::unordered_set<Weight> members;
  for (const auto& r : sub.roots) members.insert(r.vector);
  for (const auto& r : sub.roots) {
    const bool decomposable = std::any_of(sub.roots.begin(), sub.roots.end(), [&](const Root& a) {
      return members.contains(r.vector - a.vector);
    });
    if (!decomposable) sub.simple_roots.push_back(r);
  }
  return sub;
}

bool height_leq(const RootSystem& rs, const Weight& nu, const Weight& lambda) {
  rs.require_conformant(nu);
  rs.require_conformant(lambda);
  const Weight diff = lambda - nu;
  if (diff.is_zero()) return true;
  std::vector<Weight> columns;
  for (const auto& r : rs.simple_positive()) columns.push_back(r.vector);
  const auto coefficients = solve(columns, diff);
  if (!coefficients) return false;
  return std::all_of(coefficients->begin(), coefficients->end(),
                     [](const Rational& c) { return is_integer(c) && c >= 0; });
}

bool is_s_free(const RootSystem& rs, const Root& simple, const Weight& lambda) {
  const auto& simples = rs.simple_even();
  if (std::find(simples.begin(), simples.end(), simple) == simples.end()) {
    throw Error(ErrorKind::NotSimpleRoot, rs.label(simple.vector) + " is not a simple root of the even positive system");
  }
  const Weight shifted = lambda + rs.rho();
  const Weight reflected = rs.reflect(simple, shifted) - rs.rho();
  return height_leq(rs, lambda, reflected);
}

Weight typicalizing_shift(const RootSystem& rs, const Weight& mu, ShiftSearch search) {
  rs.require_conformant(mu);
  const std::size_t rank = rs.rank();
  constexpr std::size_t kBudgetPerShell = 200000;
  auto in_phi = [&](const Weight& kappa, int d) {
    const Weight shifted = kappa + rs.rho_even();
    for (const auto& check : rs.even_coroots()) {
      const Rational p = inner(shifted, check);
      if (!is_integer(p) || p < d) return false;
    }
    return true;
  };
  for (int d = 1; d <= search.max_d; d *= 2) {
    const Weight base = Rational(d - 1) * rs.rho_even();
    for (int r = 0; r <= search.max_radius; ++r) {
      std::vector<std::int64_t> t(rank, -r);
      std::size_t tried = 0;
      while (tried < kBudgetPerShell) {
        const bool on_shell =
            r == 0 || std::any_of(t.begin(), t.end(), [r](std::int64_t x) { return x == r || x == -r; });
        if (on_shell) {
          ++tried;
          const Weight kappa = base + Weight::from_integers(rs.eps_rank(), t);
          if (in_phi(kappa, d) && is_integral(rs, kappa) && regular_strongly_typical(rs, mu + kappa)) {
            return kappa;
          }
        }
        std::size_t k = rank;
        while (k > 0 && t[k - 1] == r) {
          t[k - 1] = -r;
          --k;
        }
        if (k == 0) break;
        ++t[k - 1];
      }
    }
  }
  throw Error(ErrorKind::SearchExhausted,
              "no typicalizing shift found up to d = " + std::to_string(search.max_d) +
                  " and radius " + std::to_string(search.max_radius));
}

}  // namespace superprim
