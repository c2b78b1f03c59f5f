#include <gtest/gtest.h>

#include "qci/constructions.hpp"
#include "qci/qci_lie.hpp"
#include "qci/socle_bounds.hpp"

using namespace qci;

namespace {

std::size_t brandt_formula(std::uint32_t p, std::uint32_t e) {
  std::size_t m = (p - 1) / e;
  return m * m + 2 * p - 3;
}

}  // namespace

TEST(SocleBound, QciGrid) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {5, 4}, {7, 3}}) {
    auto q = make_qci(p, e);
    auto s = check_socle_bound(q.algebra, hh1_qci(q).lie);
    EXPECT_EQ(s.ext1_sum, 2u);
    EXPECT_EQ(s.socle_dim, 2 * e);
    EXPECT_TRUE(s.holds());
  }
}

TEST(SocleBound, GenericPathMatches) {
  auto q = make_qci(5, 4);
  EXPECT_EQ(check_socle_bound(q.algebra).socle_dim, check_socle_bound(q.algebra, hh1_qci(q).lie).socle_dim);
}

TEST(SocleBound, GroupAlgebra) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto g = make_group_algebra_cp_cpm1(p);
    auto s = check_socle_bound(g.algebra);
    EXPECT_EQ(s.socle_dim, 1u) << p;
    EXPECT_EQ(s.ext1_sum, 0u) << p;
    EXPECT_TRUE(s.holds());
  }
}

TEST(SocleBound, RejectsForeignLieStructure) {
  auto a = make_qci(3, 2), b = make_qci(3, 2);
  EXPECT_THROW(check_socle_bound(a.algebra, hh1_qci(b).lie), Error);
}

TEST(Ext1, SplitLocalUsesRadicalLayer) {
  auto q = make_qci(5, 2);
  EXPECT_EQ(ext1_self_sum(q.algebra), 2u);
  EXPECT_EQ(derivations_with_coefficients(q.algebra, BimoduleSpec<PrimeField>::sub(socle_layer(q.algebra, 1))).h1_dim(), 2u);
}

TEST(Asoca, ThreeWayEquality) {
  struct Case {
    std::uint32_t p, e;
    std::size_t want;
  };
  for (auto c : std::vector<Case>{{3, 2, 5}, {5, 2, 12}, {5, 4, 9}}) {
    auto r = check_asoca(make_qci(c.p, c.e).algebra);
    EXPECT_EQ(r.center_minus_simples, c.want);
    EXPECT_EQ(r.hom_a_to_a_mod_soc, c.want);
    EXPECT_EQ(r.hom_j_to_a, c.want);
    EXPECT_TRUE(r.holds());
  }
  auto g = check_asoca(make_group_algebra_cp_cpm1(3).algebra);
  EXPECT_EQ(g.center_minus_simples, 1u);
  EXPECT_TRUE(g.holds());
}

TEST(Brandt, QciMatchesClosedForm) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {5, 4}, {7, 2}, {7, 3}, {7, 6}}) {
    auto b = check_brandt(make_qci(p, e).algebra);
    EXPECT_EQ(b.bound, brandt_formula(p, e));
    EXPECT_EQ(b.ext1_sum, 2u);
    EXPECT_TRUE(b.holds());
  }
}

TEST(Brandt, ComparisonWithSocleBound) {
  EXPECT_EQ(brandt_formula(3, 2), 4u);
  EXPECT_EQ(brandt_formula(7, 2), 20u);
  EXPECT_EQ(brandt_formula(13, 12), 24u);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t e = 2; e < p; ++e)
      if ((p - 1) % e == 0) EXPECT_EQ(brandt_formula(p, e) == 2 * e, e == p - 1) << p << "," << e;
  // the group algebra reverses the comparison
  auto g = make_group_algebra_cp_cpm1(3);
  EXPECT_LT(check_brandt(g.algebra).bound, check_socle_bound(g.algebra).socle_dim);
}

TEST(HomToSocle, EqualsSimpleCount) {
  EXPECT_EQ(hom_a_to_socle(make_qci(5, 2).algebra), 1u);
  for (std::uint32_t p : {3u, 5u}) {
    auto g = make_group_algebra_cp_cpm1(p);
    EXPECT_EQ(hom_a_to_socle(g.algebra), g.algebra.simple_count());
    EXPECT_EQ(g.algebra.simple_count(), p - 1);
  }
}
