#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superprim/hecke.hpp"
#include "superprim/root_system.hpp"
#include "superprim/star_action.hpp"
#include "superprim/weight.hpp"
#include "superprim/weyl_group.hpp"

namespace superprim {

enum class Verdict { included, not_included, incomparable_bases };
std::string to_string(Verdict v);

/// ν = w∗μ with μ the dominant member of the star orbit of ν.
struct Decomposition {
  WeylElement w;
  ElementTable::Index index = 0;
  Weight mu;
};

struct ChainStep {
  WeylElement element;
  std::size_t simple = 0;
};

struct InclusionCertificate {
  Verdict verdict = Verdict::not_included;
  /// Included both ways (same left cell over the same base).
  bool equal = false;
  Weight mu1;
  Weight mu2;
  WeylElement w1;
  WeylElement w2;
  /// w2 = c_0, c_1, ..., each c_{k+1} occurring in C'_{s_k} C'_{c_k}, ending at w1.
  /// The last entry carries w1 and no further step.
  std::vector<ChainStep> chain;
};

/// Nodes are left cells; an edge (a, b) means J(cell a) ⊊ J(cell b) and is
/// a covering relation.
struct HasseDiagram {
  struct Node {
    std::vector<ElementTable::Index> elements;
    std::vector<Weight> weights;
  };
  Weight mu;
  std::vector<Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct OrderLimits {
  std::uint64_t max_group_order = WeylGroup::kDefaultMaxOrder;
  std::size_t max_kl_order = KazhdanLusztig::kDefaultMaxOrder;
};

/// Primitive-ideal inclusions for integral generic weights of one root
/// system. The Weyl group table and KL data are built on first use.
class PrimitiveOrder {
 public:
  explicit PrimitiveOrder(RootSystem rs, std::optional<Rational> margin = std::nullopt,
                          OrderLimits limits = {});

  const RootSystem& root_system() const noexcept { return rs_; }
  const ElementTable& table() const;
  const KazhdanLusztig& kl() const;

  /// Throws NonIntegralWeight, NonGenericWeight, NoDominantRepresentative,
  /// OrbitNotFree, GroupTooLarge.
  Decomposition canonical_decomposition(const Weight& nu) const;
  InclusionCertificate ideal_includes(const Weight& nu, const Weight& lambda) const;
  bool ideal_equal(const Weight& nu, const Weight& lambda) const;
  /// Uses the dominant base of the given weight.
  HasseDiagram hasse_dag(const Weight& weight) const;

 private:
  bool is_dominant(const Weight& x) const;

  RootSystem rs_;
  std::optional<Rational> margin_;
  OrderLimits limits_;
  mutable std::once_flag table_once_;
  mutable std::shared_ptr<const ElementTable> table_;
  mutable std::once_flag kl_once_;
  mutable std::unique_ptr<KazhdanLusztig> kl_;
};

Decomposition canonical_decomposition(const RootSystem& rs, const Weight& nu,
                                      std::optional<Rational> margin = std::nullopt);
InclusionCertificate ideal_includes(const RootSystem& rs, const Weight& nu, const Weight& lambda,
                                    std::optional<Rational> margin = std::nullopt);
bool ideal_equal(const RootSystem& rs, const Weight& nu, const Weight& lambda,
                 std::optional<Rational> margin = std::nullopt);
HasseDiagram hasse_dag(const RootSystem& rs, const Weight& mu, std::optional<Rational> margin = std::nullopt);

/// Graphviz rendering; node labels list the cell's reduced words and weights.
std::string to_dot(const HasseDiagram& diagram, const ElementTable& table);

}  // namespace superprim
