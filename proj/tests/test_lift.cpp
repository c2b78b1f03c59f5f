#include <gtest/gtest.h>

#include <map>

#include "qci/lift.hpp"

using namespace qci;

namespace {

Rational coeff(const QAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  for (const auto& [c, t] : a.product(i, j))
    if (c == k) return t;
  return 0;
}

std::size_t odd_count(std::uint32_t p) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 1; j < p; ++j) n += (i % 2 || j % 2);
  return n;
}

// Building and certifying the p=7 algebra takes seconds; share instances.
const LiftedAlgebra& lifted(std::uint32_t p) {
  static std::map<std::uint32_t, LiftedAlgebra> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, make_lifted_algebra(p)).first;
  return it->second;
}

}  // namespace

TEST(Lift, RelationsAtThree) {
  const auto& l = lifted(3);
  const auto& a = l.algebra;
  ASSERT_EQ(a.dim(), 9u);
  // gamma * gamma^2 = gamma^3 = 3 gamma
  EXPECT_EQ(a.product(l.index(1, 0), l.index(2, 0)).size(), 1u);
  EXPECT_EQ(coeff(a, l.index(1, 0), l.index(2, 0), l.index(1, 0)), 3);
  // gamma^2 * gamma^2 = 3 gamma^2
  EXPECT_EQ(coeff(a, l.index(2, 0), l.index(2, 0), l.index(2, 0)), 3);
  // delta gamma = -gamma delta
  EXPECT_EQ(coeff(a, l.index(0, 1), l.index(1, 0), l.index(1, 1)), -1);
  EXPECT_EQ(coeff(a, l.index(1, 0), l.index(0, 1), l.index(1, 1)), 1);
  EXPECT_EQ(l.f, normalized_f(3));
}

TEST(Lift, ReducesToQci) {
  for (std::uint32_t p : {3u, 5u, 7u}) EXPECT_TRUE(reduces_to_qci(lifted(p))) << p;
}

TEST(Lift, RejectsNonPrime) {
  EXPECT_THROW(make_lifted_algebra(4), Error);
  EXPECT_THROW(make_lifted_algebra(2), Error);
}

TEST(Lift, CommutatorsAtThree) {
  const auto& l = lifted(3);
  auto c = lifted_commutator_space(l);
  EXPECT_EQ(c.span.dim(), 3u);
  EXPECT_EQ(odd_commutator_monomials(3), (std::vector<std::size_t>{l.index(1, 1), l.index(1, 2), l.index(2, 1)}));
  EXPECT_TRUE(c.matches_monomials);
  EXPECT_TRUE(c.pure);
  // gamma delta - delta gamma = 2 gamma delta: the pivots are 2, a unit away from 2
  for (const auto& d : c.pivots) EXPECT_EQ(d, 2);
}

TEST(Lift, CommutatorDimensionAndPurity) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto& l = lifted(p);
    auto c = lifted_commutator_space(l);
    EXPECT_EQ(c.span.dim(), odd_count(p));
    EXPECT_EQ(c.span.dim(), (p - 1) * (p - 1) - ((p - 1) / 2) * ((p - 1) / 2));
    EXPECT_TRUE(c.matches_monomials);
    EXPECT_TRUE(c.pure);
  }
}

TEST(Lift, CommutatorIdeal) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto& l = lifted(p);
    auto c = lifted_commutator_space(l);
    auto ideal = mixed_monomial_ideal(l);
    EXPECT_EQ(ideal.dim(), (p - 1) * (p - 1));
    EXPECT_EQ(ideal_closure(l.algebra, c.span), ideal);
    EXPECT_EQ(one_sided_multiples(l, true), ideal);
    EXPECT_EQ(one_sided_multiples(l, false), ideal);
  }
}

TEST(Lift, CommutativeQuotient) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto& l = lifted(p);
    auto d = commutative_quotient(l);
    EXPECT_EQ(d.dim(), 2 * p - 1);
    EXPECT_TRUE(commutator_space(d).is_zero());
    // labels of the kept monomials: 1, delta^j, gamma^i
    EXPECT_EQ(d.label(0), l.algebra.label(0));
    auto mu = d.basis_vector(p), nu = d.basis_vector(1);
    EXPECT_TRUE(is_zero_vec(RationalField{}, std::span<const Rational>(d.multiply(mu, nu))));
  }
}

TEST(Lift, DModPIsNotSymmetric) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto r = check_D_mod_p_not_symmetric(lifted(p));
    EXPECT_EQ(r.algebra.dim(), 2 * p - 1);
    EXPECT_TRUE(r.relations);
    EXPECT_EQ(r.socle_dim, 2u);
    EXPECT_TRUE(r.no_symmetric_form);
  }
}

TEST(Lift, ExhaustiveGramRankAtThree) {
  auto r = check_D_mod_p_not_symmetric(lifted(3));
  EXPECT_LT(max_gram_rank_exhaustive(r.algebra), 5u);
}

TEST(Lift, NegativeControlQciHasForm) {
  auto q = make_qci(5, 2);
  EXPECT_TRUE(q.algebra.has_form());
  EXPECT_EQ(rank(q.algebra.gram()), q.algebra.dim());
}
