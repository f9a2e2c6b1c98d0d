#include <gtest/gtest.h>

#include "generators.hpp"
#include "superprim/error.hpp"
#include "superprim/restriction.hpp"
#include "superprim/star_action.hpp"
#include "superprim/weight_predicates.hpp"

namespace superprim {
namespace {

std::vector<RootSystem> families() {
  return {build_root_system(Family::gl, 1, 1), build_root_system(Family::gl, 2, 1),
          build_root_system(Family::gl, 2, 2), build_root_system(Family::gl, 3, 1),
          build_root_system(Family::osp, 1, 2), build_root_system(Family::osp, 2, 1),
          build_root_system(Family::osp, 3, 1), build_root_system(Family::osp, 3, 2),
          build_root_system(Family::osp, 4, 1), build_root_system(Family::osp, 5, 1)};
}

bool has_mixed_odd_root(const RootSystem& rs) {
  for (const auto& g : rs.positive_odd()) {
    for (std::size_t i = 0; i < rs.eps_rank(); ++i) {
      if (g.vector.eps(i) != 0) return true;
    }
  }
  return false;
}

TEST(PenkovRestrict, Examples) {
  const RootSystem gl11 = build_root_system(Family::gl, 1, 1);
  const auto r = penkov_restrict(gl11, Weight({1}, {0}));
  EXPECT_EQ(r, ClassMultiset<Weight>::from_labels({Weight({1}, {0}), Weight({0}, {1})}));
  const RootSystem gl21 = build_root_system(Family::gl, 2, 1);
  EXPECT_EQ(penkov_restrict(gl21, Weight({3, 1}, {-2})).total(), 4);
  const RootSystem gl20 = build_root_system(Family::gl, 2, 0);
  EXPECT_EQ(penkov_restrict(gl20, Weight({5, 0}, {})), ClassMultiset<Weight>::from_labels({Weight({5, 0}, {})}));
  EXPECT_THROW((void)penkov_restrict(gl21, -gl21.rho()), Error);
}

TEST(PenkovRestrict, SummandsCarrySubsets) {
  const RootSystem gl21 = build_root_system(Family::gl, 2, 1);
  const auto summands = restriction_summands(gl21, Weight({3, 1}, {-2}));
  ASSERT_EQ(summands.size(), 4U);
  for (const auto& s : summands) {
    Weight expected({3, 1}, {-2});
    for (auto k : s.subset) expected -= gl21.positive_odd()[k].vector;
    EXPECT_EQ(s.weight, expected);
  }
}

TEST(PenkovRestrict, CardinalityIsPowerOfSupport) {
  testing::Rng rng(67);
  for (const auto& rs : families()) {
    for (int trial = 0; trial < 30; ++trial) {
      const Weight nu = trial % 2 == 0 && has_mixed_odd_root(rs)
                            ? testing::random_atypical_generic_weight(rs, rng, false)
                            : testing::random_generic_weight(rs, rng);
      const auto r = penkov_restrict(rs, nu);
      EXPECT_EQ(r.total(), std::int64_t{1} << odd_support(rs, nu).size());
      EXPECT_LE(static_cast<std::int64_t>(r.distinct()), r.total());
    }
  }
}

TEST(PenkovRestrict, EqualOddSumsCollide) {
  // (e1-d1)+(e2-d2) = (e1-d2)+(e2-d1) whatever the weight.
  const RootSystem gl22 = build_root_system(Family::gl, 2, 2);
  const Weight nu({31, 17}, {-7, -40});
  ASSERT_TRUE(is_strongly_typical(gl22, nu));
  ASSERT_TRUE(is_generic(gl22, nu));
  const auto r = penkov_restrict(gl22, nu);
  EXPECT_EQ(r.total(), 16);
  EXPECT_EQ(r.distinct(), 15U);
  EXPECT_EQ(r.multiplicity(Weight({30, 16}, {-6, -39})), 2);
}

TEST(DominantRestriction, Examples) {
  const RootSystem gl11 = build_root_system(Family::gl, 1, 1);
  EXPECT_EQ(dominant_restriction_set(gl11, Weight({1}, {0})),
            (std::vector<Weight>{Weight({0}, {1}), Weight({1}, {0})}));
  const RootSystem gl30 = build_root_system(Family::gl, 3, 0);
  EXPECT_EQ(dominant_restriction_set(gl30, Weight({4, 0, -4}, {})), std::vector<Weight>{Weight({4, 0, -4}, {})});
  testing::Rng rng(71);
  const RootSystem osp = build_root_system(Family::osp, 3, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Weight mu = trial % 2 ? testing::random_dominant_generic_weight(osp, rng)
                                : testing::random_atypical_generic_weight(osp, rng, true);
    const auto r = dominant_restriction_set(osp, mu);
    EXPECT_EQ(r.size(), std::size_t{1} << odd_support(osp, mu).size());
    for (const auto& kappa : r) EXPECT_TRUE(is_circle_regular_dominant(osp, kappa));
  }
}

TEST(DominantRestriction, RejectsNonDominant) {
  const RootSystem gl21 = build_root_system(Family::gl, 2, 1);
  try {
    (void)dominant_restriction_set(gl21, Weight({1, 3}, {-2}), Rational(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCircleDominant);
  }
}

TEST(WeylDimension, Examples) {
  const RootSystem gl20 = build_root_system(Family::gl, 2, 0);
  EXPECT_EQ(weyl_dim_even(gl20, gl20.zero()), 1);
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= a; ++b) EXPECT_EQ(weyl_dim_even(gl20, Weight({a, b}, {})), a - b + 1);
  }
  const RootSystem gl30 = build_root_system(Family::gl, 3, 0);
  EXPECT_EQ(weyl_dim_even(gl30, Weight({1, 0, 0}, {})), 3);
  EXPECT_EQ(weyl_dim_even(gl30, Weight({1, 0, -1}, {})), 8);
  // so(5) x sp(2): vector of so(5) is 5-dimensional, vector of sp(2) is 2-dimensional.
  const RootSystem osp = build_root_system(Family::osp, 5, 1);
  EXPECT_EQ(weyl_dim_even(osp, Weight({1, 0}, {0})), 5);
  EXPECT_EQ(weyl_dim_even(osp, Weight({0, 0}, {1})), 2);
  EXPECT_EQ(weyl_dim_even(osp, Weight({Rational(1, 2), Rational(1, 2)}, {0})), 4);
  EXPECT_THROW((void)weyl_dim_even(gl20, Weight({0, 1}, {})), Error);
  EXPECT_THROW((void)weyl_dim_even(gl20, Weight({Rational(1, 2), 0}, {})), Error);
}

// res L(w∗μ) = ⊕_{κ ∈ R_μ} L_0(w∘κ) with multiplicities, exhaustively over W.
TEST(RestrictionIdentity, StarOrbitRestrictsToCircleOrbit) {
  testing::Rng rng(73);
  for (const auto& rs : families()) {
    const auto table = std::make_shared<const ElementTable>(WeylGroup(rs));
    const WeylGroup& g = table->group();
    for (int trial = 0; trial < 50; ++trial) {
      const bool atypical = trial % 2 == 0 && has_mixed_odd_root(rs);
      const Weight mu = atypical ? testing::random_atypical_generic_weight(rs, rng, true)
                                 : testing::random_dominant_generic_weight(rs, rng);
      const auto r_mu = dominant_restriction_set(rs, mu);
      const auto base = penkov_restrict(rs, mu);
      ASSERT_EQ(base.distinct(), r_mu.size());
      const StarOrbit orbit(table, mu);
      std::vector<ClassMultiset<Weight>> circle(table->size());
      for (ElementTable::Index w = 0; w < table->size(); ++w) {
        for (const auto& [kappa, mult] : base.entries()) {
          circle[w].add(g.circle_act(table->element(w), kappa), mult);
        }
        EXPECT_EQ(penkov_restrict(rs, orbit[w], Rational(0)), circle[w])
            << rs.name() << " w=" << to_string(table->word(w));
      }
      for (ElementTable::Index w = 0; w < table->size(); ++w) {
        const auto restricted = penkov_restrict(rs, orbit[w], Rational(0));
        for (ElementTable::Index v = 0; v < table->size(); ++v) {
          if (v != w) {
            EXPECT_TRUE(circle[v].disjoint(restricted));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace superprim
