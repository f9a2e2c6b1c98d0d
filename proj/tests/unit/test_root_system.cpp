#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "superprim/error.hpp"
#include "superprim/root_system.hpp"
#include "superprim/weyl_group.hpp"

namespace superprim {
namespace {

std::set<std::string> labels(const RootSystem& rs, const std::vector<Root>& roots) {
  std::set<std::string> out;
  for (const auto& r : roots) out.insert(rs.label(r.vector));
  return out;
}

std::vector<RootSystem> sample_systems() {
  return {build_root_system(Family::gl, 1, 1), build_root_system(Family::gl, 2, 1),
          build_root_system(Family::gl, 3, 2), build_root_system(Family::gl, 4, 0),
          build_root_system(Family::osp, 1, 2), build_root_system(Family::osp, 2, 2),
          build_root_system(Family::osp, 3, 1), build_root_system(Family::osp, 3, 2),
          build_root_system(Family::osp, 4, 2), build_root_system(Family::osp, 5, 2),
          build_root_system(Family::osp, 6, 1)};
}

TEST(RootSystem, Gl11Rho) {
  const RootSystem rs = build_root_system(Family::gl, 1, 1);
  EXPECT_EQ(rs.rho_even(), Weight({0}, {0}));
  EXPECT_EQ(rs.rho_odd(), Weight({Rational(1, 2)}, {Rational(-1, 2)}));
  EXPECT_EQ(rs.rho(), Weight({Rational(-1, 2)}, {Rational(1, 2)}));
}

TEST(RootSystem, Gl20HasNoOddRoots) {
  const RootSystem rs = build_root_system(Family::gl, 2, 0);
  EXPECT_TRUE(rs.positive_odd().empty());
  EXPECT_EQ(rs.rho(), Weight({Rational(1, 2), Rational(-1, 2)}, {}));
}

TEST(RootSystem, Osp31Roots) {
  const RootSystem rs = build_root_system(Family::osp, 3, 1);
  EXPECT_EQ(labels(rs, rs.positive_even()), (std::set<std::string>{"e1", "2d1"}));
  EXPECT_EQ(labels(rs, rs.positive_odd()), (std::set<std::string>{"d1", "d1-e1", "d1+e1"}));
  EXPECT_EQ(rs.rho_even(), Weight({Rational(1, 2)}, {1}));
  EXPECT_EQ(rs.rho_odd(), Weight({0}, {Rational(3, 2)}));
  EXPECT_EQ(rs.rho(), Weight({Rational(1, 2)}, {Rational(-1, 2)}));
  EXPECT_EQ(rs.name(), "osp(3|2)");
}

TEST(RootSystem, RankChecks) {
  auto kind = [](Family f, int m, int n) {
    try {
      (void)build_root_system(f, m, n);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::SearchExhausted;
  };
  EXPECT_EQ(kind(Family::gl, 0, 1), ErrorKind::RankOutOfRange);
  EXPECT_EQ(kind(Family::gl, 1, -1), ErrorKind::RankOutOfRange);
  EXPECT_EQ(kind(Family::osp, 3, 0), ErrorKind::RankOutOfRange);
  EXPECT_EQ(kind(Family::osp, 0, 1), ErrorKind::RankOutOfRange);
  EXPECT_THROW((void)parse_family("sl"), Error);
  EXPECT_EQ(parse_family("osp"), Family::osp);
}

TEST(RootSystem, PairingExamples) {
  const RootSystem rs = build_root_system(Family::gl, 1, 1);
  const Weight e1 = rs.unit(0);
  const Weight d1 = rs.unit(1);
  EXPECT_EQ(rs.pairing(e1, e1), 1);
  EXPECT_EQ(rs.pairing(d1, d1), -1);
  EXPECT_EQ(rs.pairing(rs.rho(), e1 - d1), 0);
  EXPECT_THROW((void)rs.pairing(e1, Weight(2, 0)), Error);
}

TEST(RootSystem, CorootExamples) {
  const RootSystem gl = build_root_system(Family::gl, 2, 1);
  const Root a{Parity::even, gl.unit(0) - gl.unit(1)};
  EXPECT_EQ(gl.coroot(a), a.vector);
  try {
    (void)gl.coroot(gl.positive_odd().front());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IsotropicRoot);
  }
  const RootSystem osp = build_root_system(Family::osp, 3, 1);
  EXPECT_EQ(osp.coroot({Parity::even, Rational(2) * osp.unit(1)}), -osp.unit(1));
  EXPECT_EQ(osp.coroot({Parity::even, osp.unit(0)}), Rational(2) * osp.unit(0));
  for (const auto& rs : sample_systems()) {
    for (const auto& alpha : rs.positive_even()) EXPECT_EQ(rs.pairing(alpha.vector, rs.coroot(alpha)), 2);
  }
}

TEST(RootSystem, ReflectExamples) {
  const RootSystem gl = build_root_system(Family::gl, 2, 1);
  const Root a{Parity::even, gl.unit(0) - gl.unit(1)};
  EXPECT_EQ(gl.reflect(a, Weight({3, 1}, {-2})), Weight({1, 3}, {-2}));
  const RootSystem osp = build_root_system(Family::osp, 3, 1);
  const Root b{Parity::even, Rational(2) * osp.unit(1)};
  EXPECT_EQ(osp.reflect(b, Weight({0}, {5})), Weight({0}, {-5}));
}

TEST(RootSystem, ReflectionIsInvolutiveIsometry) {
  testing::Rng rng(11);
  for (const auto& rs : sample_systems()) {
    for (int trial = 0; trial < 50; ++trial) {
      const Weight lambda = testing::random_integer_weight(rs, rng, 9);
      const Weight mu = testing::random_integer_weight(rs, rng, 9);
      for (const auto& alpha : rs.positive_even()) {
        EXPECT_EQ(rs.reflect(alpha, rs.reflect(alpha, lambda)), lambda);
        EXPECT_EQ(rs.pairing(rs.reflect(alpha, lambda), rs.reflect(alpha, mu)), rs.pairing(lambda, mu));
      }
    }
  }
}

TEST(RootSystem, RhoIsDifferenceOfHalfSums) {
  for (const auto& rs : sample_systems()) {
    EXPECT_EQ(rs.rho(), rs.rho_even() - rs.rho_odd());
    Weight even = rs.zero();
    for (const auto& a : rs.positive_even()) even += a.vector;
    EXPECT_EQ(Rational(2) * rs.rho_even(), even);
    Weight odd = rs.zero();
    for (const auto& g : rs.positive_odd()) odd += g.vector;
    EXPECT_EQ(Rational(2) * rs.rho_odd(), odd);
  }
}

TEST(RootSystem, RootCounts) {
  for (const auto& rs : sample_systems()) {
    const std::size_t l = rs.eps_rank();
    const std::size_t n = rs.delta_rank();
    if (rs.family() == Family::gl) {
      EXPECT_EQ(rs.positive_even().size(), l * (l - 1) / 2 + n * (n - 1) / 2);
      EXPECT_EQ(rs.positive_odd().size(), l * n);
    } else {
      const bool odd_m = rs.m() % 2 == 1;
      EXPECT_EQ(rs.positive_even().size(), l * (l - 1) + (odd_m ? l : 0) + n * n);
      EXPECT_EQ(rs.positive_odd().size(), n * (2 * l + (odd_m ? 1 : 0)));
    }
    for (const auto& a : rs.positive_even()) EXPECT_NE(rs.pairing(a.vector, a.vector), 0);
  }
}

TEST(RootSystem, GlEvenSimpleRootsAreSimpleInFullSystem) {
  for (const auto& rs : sample_systems()) {
    if (rs.family() != Family::gl) continue;
    for (const auto& alpha : rs.simple_even()) {
      EXPECT_TRUE(std::find(rs.simple_positive().begin(), rs.simple_positive().end(), alpha) !=
                  rs.simple_positive().end())
          << rs.label(alpha.vector);
    }
  }
}

TEST(RootSystem, OspOddSystemStableExceptLongDelta) {
  for (const auto& rs : sample_systems()) {
    if (rs.family() != Family::osp) continue;
    std::set<Weight> odd;
    for (const auto& g : rs.positive_odd()) odd.insert(g.vector);
    for (std::size_t s = 0; s < rs.simple_even().size(); ++s) {
      std::set<Weight> image;
      for (const auto& g : rs.positive_odd()) image.insert(rs.reflect(rs.simple_even()[s], g.vector));
      if (s == rs.long_delta_simple()) {
        EXPECT_NE(image, odd) << rs.name();
      } else {
        EXPECT_EQ(image, odd) << rs.name() << " s" << s + 1;
      }
    }
  }
}

TEST(RootSystem, GenericityMarginValues) {
  const RootSystem gl = build_root_system(Family::gl, 3, 2);
  for (std::size_t i = 0; i < gl.positive_even().size(); ++i) {
    const bool eps_root = gl.positive_even()[i].vector.eps(0) != 0 || gl.positive_even()[i].vector.eps(1) != 0 ||
                          gl.positive_even()[i].vector.eps(2) != 0;
    EXPECT_EQ(gl.genericity_margin(i), eps_root ? 4 : 6);
  }
}

TEST(RootSystem, Labels) {
  const RootSystem gl = build_root_system(Family::gl, 2, 1);
  EXPECT_EQ(gl.label(gl.positive_odd().front().vector), "e1-d1");
  EXPECT_EQ(gl.label(gl.zero()), "0");
}

}  // namespace
}  // namespace superprim
