#include "superprim/prim_order.hpp"

#include <sstream>

#include "superprim/error.hpp"
#include "superprim/weight_literal.hpp"
#include "superprim/weight_predicates.hpp"

namespace superprim {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::included:
      return "included";
    case Verdict::not_included:
      return "not_included";
    case Verdict::incomparable_bases:
      return "incomparable_bases";
  }
  return "unknown";
}

PrimitiveOrder::PrimitiveOrder(RootSystem rs, std::optional<Rational> margin, OrderLimits limits)
    : rs_(std::move(rs)), margin_(margin), limits_(limits) {}

const ElementTable& PrimitiveOrder::table() const {
  std::call_once(table_once_, [this] {
    table_ = std::make_shared<const ElementTable>(WeylGroup(rs_), limits_.max_group_order);
  });
  return *table_;
}

const KazhdanLusztig& PrimitiveOrder::kl() const {
  table();
  std::call_once(kl_once_, [this] { kl_ = std::make_unique<KazhdanLusztig>(table_, limits_.max_kl_order); });
  return *kl_;
}

bool PrimitiveOrder::is_dominant(const Weight& x) const {
  const Weight shifted = x + rs_.rho();
  for (const auto& check : rs_.even_coroots()) {
    if (inner(shifted, check) <= 0) return false;
  }
  return true;
}

Decomposition PrimitiveOrder::canonical_decomposition(const Weight& nu) const {
  require_integral(rs_, nu);
  require_generic(rs_, nu, margin_);
  const ElementTable& t = table();
  const StarOrbit orbit(table_, nu, margin_);
  if (!orbit.is_free()) {
    throw Error(ErrorKind::OrbitNotFree, "star orbit of " + format_weight(nu) + " is not free");
  }
  std::vector<ElementTable::Index> dominant;
  for (ElementTable::Index u = 0; u < orbit.size(); ++u) {
    if (is_dominant(orbit[u])) dominant.push_back(u);
  }
  if (dominant.size() != 1) {
    throw Error(ErrorKind::NoDominantRepresentative,
                "star orbit of " + format_weight(nu) + " has " + std::to_string(dominant.size()) +
                    " dominant members");
  }
  Decomposition d;
  d.index = t.inverse(dominant.front());
  d.w = t.element(d.index);
  d.mu = orbit[dominant.front()];
  const StarOrbit base(table_, d.mu, margin_);
  if (base[d.index] != nu) {
    throw Error(ErrorKind::WordDependence, "star action does not return " + format_weight(nu) + " from " +
                                               format_weight(d.mu) + "; got " + format_weight(base[d.index]));
  }
  return d;
}

InclusionCertificate PrimitiveOrder::ideal_includes(const Weight& nu, const Weight& lambda) const {
  const Decomposition d1 = canonical_decomposition(nu);
  const Decomposition d2 = canonical_decomposition(lambda);
  InclusionCertificate cert;
  cert.mu1 = d1.mu;
  cert.mu2 = d2.mu;
  cert.w1 = d1.w;
  cert.w2 = d2.w;
  if (d1.mu != d2.mu) {
    cert.verdict = Verdict::incomparable_bases;
    return cert;
  }
  const KazhdanLusztig& k = kl();
  if (!k.left_leq(d2.index, d1.index)) {
    cert.verdict = Verdict::not_included;
    return cert;
  }
  cert.verdict = Verdict::included;
  cert.equal = k.left_leq(d1.index, d2.index);
  for (const auto& step : k.left_chain(d2.index, d1.index)) {
    cert.chain.push_back({table().element(step.from), step.simple});
  }
  cert.chain.push_back({d1.w, 0});
  return cert;
}

bool PrimitiveOrder::ideal_equal(const Weight& nu, const Weight& lambda) const {
  const Decomposition d1 = canonical_decomposition(nu);
  const Decomposition d2 = canonical_decomposition(lambda);
  return d1.mu == d2.mu && kl().cell_of(d1.index) == kl().cell_of(d2.index);
}

HasseDiagram PrimitiveOrder::hasse_dag(const Weight& weight) const {
  const Decomposition d = canonical_decomposition(weight);
  const KazhdanLusztig& k = kl();
  const StarOrbit orbit(table_, d.mu, margin_);
  HasseDiagram out;
  out.mu = d.mu;
  const auto& cells = k.left_cells();
  for (const auto& cell : cells) {
    HasseDiagram::Node node;
    node.elements = cell;
    for (auto w : cell) node.weights.push_back(orbit[w]);
    out.nodes.push_back(std::move(node));
  }
  // below(a, b): J(a) ⊊ J(b), i.e. rep(b) ≤_L rep(a) across distinct cells.
  const std::size_t n = cells.size();
  auto below = [&](std::size_t a, std::size_t b) { return a != b && k.left_leq(cells[b][0], cells[a][0]); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (below(a, c) && below(c, b)) covered = false;
      }
      if (covered) out.edges.emplace_back(a, b);
    }
  }
  return out;
}

Decomposition canonical_decomposition(const RootSystem& rs, const Weight& nu, std::optional<Rational> margin) {
  return PrimitiveOrder(rs, margin).canonical_decomposition(nu);
}

InclusionCertificate ideal_includes(const RootSystem& rs, const Weight& nu, const Weight& lambda,
                                    std::optional<Rational> margin) {
  return PrimitiveOrder(rs, margin).ideal_includes(nu, lambda);
}

bool ideal_equal(const RootSystem& rs, const Weight& nu, const Weight& lambda, std::optional<Rational> margin) {
  return PrimitiveOrder(rs, margin).ideal_equal(nu, lambda);
}

HasseDiagram hasse_dag(const RootSystem& rs, const Weight& mu, std::optional<Rational> margin) {
  return PrimitiveOrder(rs, margin).hasse_dag(mu);
}

std::string to_dot(const HasseDiagram& diagram, const ElementTable& table) {
  std::ostringstream os;
  os << "// edges point from the smaller primitive ideal to the larger: J(tail) < J(head)\n";
  os << "digraph hasse {\n";
  os << "  label=\"base " << format_weight(diagram.mu) << "\";\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    const auto& node = diagram.nodes[i];
    os << "  n" << i << " [label=\"cell{";
    for (std::size_t k = 0; k < node.elements.size(); ++k) {
      os << (k ? "," : "") << to_string(table.word(node.elements[k]));
    }
    os << "}";
    for (const auto& w : node.weights) os << "\\n" << format_weight(w);
    os << "\"];\n";
  }
  for (const auto& [a, b] : diagram.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace superprim
