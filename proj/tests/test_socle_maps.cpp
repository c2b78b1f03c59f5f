#include <gtest/gtest.h>

#include "qci/constructions.hpp"
#include "qci/socle_maps.hpp"

using namespace qci;

namespace {

using Pairs = std::vector<std::pair<Vec<PrimeField>, Vec<PrimeField>>>;

bool leibniz_all_pairs(const FDAlgebra<PrimeField>& a, const Derivation<PrimeField>& d) {
  const auto& f = a.field();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto bi = a.basis_vector(i), bj = a.basis_vector(j);
      auto lhs = d(std::span<const std::uint32_t>(a.multiply(bi, bj)));
      auto r1 = a.multiply(d(std::span<const std::uint32_t>(bi)), bj);
      auto r2 = a.multiply(bi, d(std::span<const std::uint32_t>(bj)));
      if (lhs != add_vec(f, std::span<const std::uint32_t>(r1), std::span<const std::uint32_t>(r2))) return false;
    }
  return true;
}

}  // namespace

TEST(SocleMaps, ComplementOfRadicalSquare) {
  auto q = make_qci(5, 2);
  auto xs = radical_complement(q.algebra);
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_EQ(xs[0], q.algebra.basis_vector(q.index(0, 1)));
  EXPECT_EQ(xs[1], q.algebra.basis_vector(q.index(1, 0)));
}

TEST(SocleMaps, EverySocleValuedMapIsOuterDerivation) {
  for (std::uint32_t p : {3u, 5u}) {
    auto q = make_qci(p, p - 1);
    const auto& a = q.algebra;
    auto z = a.basis_vector(q.index(p - 1, p - 1));
    auto x = a.basis_vector(q.index(1, 0)), y = a.basis_vector(q.index(0, 1));
    const auto& f = a.field();
    for (std::uint32_t s = 0; s < p; ++s)
      for (std::uint32_t t = 0; t < p; ++t) {
        Pairs v{{x, scale_vec(f, s, std::span<const std::uint32_t>(z))},
                {y, scale_vec(f, t, std::span<const std::uint32_t>(z))}};
        auto r = socle_valued_map(a, v);
        EXPECT_TRUE(leibniz_all_pairs(a, r.derivation));
        EXPECT_EQ(r.outer, s != 0 || t != 0);
      }
  }
}

TEST(SocleMaps, RejectsBadInput) {
  auto q = make_qci(3, 2);
  const auto& a = q.algebra;
  auto x = a.basis_vector(q.index(1, 0)), y = a.basis_vector(q.index(0, 1));
  auto z = a.basis_vector(q.index(2, 2));
  auto expect_invalid = [&](const Pairs& v) {
    try {
      socle_valued_map(a, v);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidSocleMap);
    }
  };
  expect_invalid({{x, x}, {y, z}});              // value outside soc
  expect_invalid({{a.unit(), z}, {y, z}});       // argument outside J
  expect_invalid({{x, z}, {add_vec(a.field(), std::span<const std::uint32_t>(x), std::span<const std::uint32_t>(
                               a.basis_vector(q.index(1, 1)))), z}});  // not a complement
  auto g = make_group_algebra_cp_cpm1(3);
  try {
    socle_valued_map(g.algebra, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSocleMap);
  }
}

TEST(SocleMaps, PairingIsDual) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {5, 4}}) {
    auto q = make_qci(p, e);
    const auto& a = q.algebra;
    auto pr = socle_two_pairing(a);
    ASSERT_EQ(pr.xs.size(), 2u);
    Vec<PrimeField> zero(a.dim(), 0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        auto want = i == j ? pr.z : zero;
        EXPECT_EQ(a.multiply(pr.xs[i], pr.ys[j]), want);
        EXPECT_EQ(a.multiply(pr.ys[j], pr.xs[i]), want);
      }
  }
}

TEST(SocleMaps, SecondSocleMapsExactlyAntisymmetric) {
  for (std::uint32_t p : {3u, 5u}) {
    auto q = make_qci(p, 2);
    const auto& a = q.algebra;
    const auto& f = a.field();
    auto pr = socle_two_pairing(a);
    EchelonBuilder<PrimeField> valid(f, 4);
    std::size_t count = 0;
    for (std::uint32_t c = 0; c < p * p * p * p; ++c) {
      Matrix<PrimeField> s(f, 2, 2);
      s(0, 0) = c % p;
      s(0, 1) = (c / p) % p;
      s(1, 0) = (c / (p * p)) % p;
      s(1, 1) = c / (p * p * p);
      bool anti = s(0, 0) == 0 && s(1, 1) == 0 && f.add(s(0, 1), s(1, 0)) == 0;
      auto d = second_socle_map(a, s, pr);
      EXPECT_EQ(d.has_value(), anti);
      if (d) {
        EXPECT_TRUE(leibniz_all_pairs(a, *d));
        valid.add(Vec<PrimeField>{s(0, 0), s(0, 1), s(1, 0), s(1, 1)});
        ++count;
      }
    }
    EXPECT_EQ(valid.rank(), 1u);
    EXPECT_EQ(count, p);
  }
}
