#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "qci/constructions.hpp"
#include "qci/structure.hpp"

using namespace qci;

namespace {

using T = std::uint32_t;

// Multiply two monomials by writing out the word and bubbling every y past
// every x with yx -> q xy, then truncating at x^p = y^p = 0.
Vec<PrimeField> rewrite_product(const QciAlgebra& q, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  PrimeField f(q.p);
  std::string w = std::string(a, 'x') + std::string(b, 'y') + std::string(c, 'x') + std::string(d, 'y');
  T coef = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == 'y' && w[i + 1] == 'x') {
        std::swap(w[i], w[i + 1]);
        coef = f.mul(coef, q.q);
        moved = true;
      }
  }
  std::size_t nx = static_cast<std::size_t>(std::count(w.begin(), w.end(), 'x'));
  std::size_t ny = w.size() - nx;
  Vec<PrimeField> out(q.dim(), 0);
  if (nx < q.p && ny < q.p) out[q.index(nx, ny)] = coef;
  return out;
}

Subspace<PrimeField> monomial_span(const QciAlgebra& q, auto pred) {
  std::vector<Vec<PrimeField>> g;
  for (std::size_t i = 0; i < q.p; ++i)
    for (std::size_t j = 0; j < q.p; ++j)
      if (pred(i, j)) g.push_back(q.algebra.basis_vector(q.index(i, j)));
  return Subspace<PrimeField>::span(q.algebra.field(), q.dim(), g);
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallGrid{{3, 2}, {5, 2}, {5, 4}, {7, 2}, {7, 3}, {7, 6}};

}  // namespace

TEST(Qci, RelationsAtThreeTwo) {
  auto q = make_qci(3, 2);
  EXPECT_EQ(q.q, 2u);
  const auto& a = q.algebra;
  auto x = a.basis_vector(q.index(1, 0)), y = a.basis_vector(q.index(0, 1));
  auto yx = a.multiply(y, x);
  Vec<PrimeField> expect(9, 0);
  expect[q.index(1, 1)] = 2;
  EXPECT_EQ(yx, expect);
  auto x2 = a.multiply(x, x);
  EXPECT_TRUE(is_zero_vec(a.field(), std::span<const T>(a.multiply(x2, x))));
}

TEST(Qci, ProductTableMatchesRewriting) {
  for (auto [p, e] : kSmallGrid) {
    auto q = make_qci(p, e);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t c = 0; c < p; ++c)
          for (std::size_t d = 0; d < p; ++d) {
            auto lhs = q.algebra.multiply(q.algebra.basis_vector(q.index(a, b)), q.algebra.basis_vector(q.index(c, d)));
            ASSERT_EQ(lhs, rewrite_product(q, a, b, c, d)) << p << "," << e << " " << a << b << c << d;
          }
  }
}

TEST(Qci, ExplicitQ) {
  auto q = make_qci(5, 2, 4);
  auto lhs = q.algebra.multiply(q.algebra.basis_vector(q.index(2, 1)), q.algebra.basis_vector(q.index(1, 2)));
  Vec<PrimeField> expect(25, 0);
  expect[q.index(3, 3)] = 4;
  EXPECT_EQ(lhs, expect);
}

TEST(Qci, BilinearSquare) {
  auto q = make_qci(3, 2);
  AlgebraElement<PrimeField> x = AlgebraElement<PrimeField>::basis(q.algebra, q.index(1, 0));
  AlgebraElement<PrimeField> y = AlgebraElement<PrimeField>::basis(q.algebra, q.index(0, 1));
  auto s = x + y;
  auto sq = multiply(s, s);
  auto expect = AlgebraElement<PrimeField>::basis(q.algebra, q.index(2, 0)) +
                AlgebraElement<PrimeField>::basis(q.algebra, q.index(0, 2));
  EXPECT_EQ(sq, expect);
  EXPECT_EQ(multiply(s, AlgebraElement<PrimeField>::one(q.algebra)), s);
  EXPECT_TRUE(multiply(AlgebraElement<PrimeField>::zero(q.algebra), s).is_zero());
}

TEST(Qci, InvalidParameters) {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::StructureMismatch;
  };
  EXPECT_EQ(kind([] { make_qci(9, 2); }), ErrorKind::InvalidParameters);
  EXPECT_EQ(kind([] { make_qci(7, 4); }), ErrorKind::InvalidParameters);
  EXPECT_EQ(kind([] { make_qci(7, 1); }), ErrorKind::InvalidParameters);
  EXPECT_EQ(kind([] { make_qci(7, 3, 6); }), ErrorKind::InvalidParameters);
}

TEST(Qci, ElementsOfDifferentAlgebras) {
  auto a = make_qci(3, 2), b = make_qci(3, 2);
  auto u = AlgebraElement<PrimeField>::one(a.algebra), v = AlgebraElement<PrimeField>::one(b.algebra);
  try {
    (void)multiply(u, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlgebraMismatch);
  }
}

TEST(Qci, CenterAndCommutatorSpans) {
  for (auto [p, e] : kSmallGrid) {
    auto q = make_qci(p, e);
    auto z = center(q.algebra);
    auto zspan = monomial_span(q, [&](auto i, auto j) { return (i % e == 0 && j % e == 0) || i == p - 1 || j == p - 1; });
    EXPECT_EQ(z, zspan);
    std::size_t m = (p - 1) / e;
    EXPECT_EQ(z.dim(), m * m + 2 * p - 1);
    auto c = commutator_space(q.algebra);
    auto cspan = monomial_span(q, [&](auto i, auto j) { return i >= 1 && j >= 1 && (i % e != 0 || j % e != 0); });
    EXPECT_EQ(c, cspan);
    EXPECT_EQ(c.dim(), (p - 1) * (p - 1) - m * m);
    EXPECT_EQ(c.dim(), q.dim() - z.dim());
    EXPECT_TRUE(is_subspace_of(c, radical_power(q.algebra, 2)));
  }
}

TEST(Qci, RadicalPowers) {
  auto q3 = make_qci(3, 2);
  EXPECT_EQ(radical_power(q3.algebra, 1).dim(), 8u);
  EXPECT_EQ(radical_power(q3.algebra, 5).dim(), 0u);
  auto q5 = make_qci(5, 2);
  std::size_t count = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) count += (i + j >= 2);
  EXPECT_EQ(radical_power(q5.algebra, 2).dim(), count);
  for (std::size_t r = 1; r < 10; ++r)
    EXPECT_EQ(radical_power(q5.algebra, r), monomial_span(q5, [&](auto i, auto j) { return i + j >= r; }));
}

TEST(Qci, PerpAndSocle) {
  for (auto [p, e] : kSmallGrid) {
    auto q = make_qci(p, e);
    const auto& a = q.algebra;
    auto j = a.radical();
    auto soc = socle_layer(a, 1);
    EXPECT_EQ(perp(a, j), soc);
    EXPECT_EQ(soc, monomial_span(q, [&](auto i, auto jj) { return i == p - 1 && jj == p - 1; }));
    EXPECT_EQ(perp(a, soc), j);
    EXPECT_EQ(perp(a, commutator_space(a)), center(a));
    EXPECT_EQ(perp(a, Subspace<PrimeField>::whole(a.field(), a.dim())).dim(), 0u);
    EXPECT_TRUE(is_subspace_of(socle_layer(a, 2), center(a)));
    for (std::size_t r = 0; r <= 2 * p; ++r) {
      auto u = radical_power(a, r);
      EXPECT_EQ(u.dim() + perp(a, u).dim(), a.dim());
      EXPECT_EQ(perp(a, perp(a, u)), u);
    }
    EXPECT_EQ(socle_layer(a, 2 * p - 1).dim(), a.dim());
  }
  auto q3 = make_qci(3, 2);
  EXPECT_EQ(socle_layer(q3.algebra, 2).dim(), 3u);
}

TEST(Qci, CenterSocle) {
  for (auto [p, e] : kSmallGrid) {
    auto q = make_qci(p, e);
    auto s = center_socle(q.algebra);
    EXPECT_EQ(s.dim(), 2 * e - 1);
    EXPECT_EQ(s, monomial_span(q, [&](auto i, auto j) {
                return (j == p - 1 && i + e >= p) || (i == p - 1 && j + e >= p);
              }));
  }
}

TEST(Qci, DimensionsIndependentOfQ) {
  for (auto [p, e] : kSmallGrid) {
    std::vector<std::size_t> ref;
    for (std::uint32_t q = 2; q < p; ++q) {
      if (multiplicative_order(q, p) != e) continue;
      auto a = make_qci(p, e, q);
      std::vector<std::size_t> dims{center(a.algebra).dim(), commutator_space(a.algebra).dim(),
                                    radical_power(a.algebra, 2).dim(), socle_layer(a.algebra, 2).dim(),
                                    center_socle(a.algebra).dim()};
      if (ref.empty()) ref = dims;
      EXPECT_EQ(dims, ref) << p << " " << e << " q=" << q;
    }
  }
}

TEST(Qci, NoFormNoPerp) {
  PrimeField f(3);
  AlgebraSpec<PrimeField> s{f, "k", {}, {{{0, 1}}}, {1}, std::nullopt, {}, 1, {}};
  auto k = FDAlgebra<PrimeField>::create(s);
  try {
    (void)perp(k, k.radical());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(GroupAlgebra, SmallestCase) {
  auto g = make_group_algebra_cp_cpm1(3);
  const auto& a = g.algebra;
  EXPECT_EQ(a.dim(), 6u);
  // Every product of basis elements is a single group element, and the
  // table is a Latin square (group axioms).
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<int> seen(6, 0);
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& pr = a.product(i, j);
      ASSERT_EQ(pr.size(), 1u);
      EXPECT_EQ(pr[0].second, 1u);
      seen[pr[0].first]++;
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
  // c a c^{-1} = a^g
  auto cidx = g.index(0, 1), aidx = g.index(1, 0);
  auto ca = a.product(cidx, aidx)[0].first;
  EXPECT_EQ(ca, a.product(g.index(g.g % 3, 0), cidx)[0].first);
  EXPECT_EQ(center(a).dim(), 3u);
  EXPECT_EQ(center(a).dim() - a.simple_count() - 1, 0u);
}

TEST(GroupAlgebra, CentreCountsConjugacyClasses) {
  // |classes| of C_p x| C_{p-1} with faithful action: 1 + 1 + (p-2) = p.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto g = make_group_algebra_cp_cpm1(p);
    EXPECT_EQ(center(g.algebra).dim(), p);
    EXPECT_EQ(g.algebra.radical().dim(), (p - 1) * (p - 1));
  }
}

TEST(GroupAlgebra, NotPrime) {
  try {
    make_group_algebra_cp_cpm1(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameters);
  }
}

TEST(Algebra, RejectsNonAssociativeTable) {
  PrimeField f(5);
  // b1 * b1 = b0 + b1 on a 2-dim space with b0 as unit: associative (a quotient of k[t]).
  // Break it: make b1*b1 = b0 but b0 not the unit on the right.
  AlgebraSpec<PrimeField> s{f, "bad", {}, {{{0, 1}}, {{1, 1}}, {{1, 1}}, {{0, 2}}}, {1, 0}, std::nullopt, {}, 1, {}};
  s.table[2] = {{1, 2}};
  try {
    FDAlgebra<PrimeField>::create(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAlgebra);
  }
}

TEST(Algebra, RejectsWrongRadical) {
  PrimeField f(3);
  // k[t]/(t^2) with the radical claimed to be zero.
  AlgebraSpec<PrimeField> s{f, "dual", {}, {{{0, 1}}, {{1, 1}}, {{1, 1}}, {}}, {1, 0}, std::nullopt, {}, 1, {}};
  try {
    FDAlgebra<PrimeField>::create(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAlgebra);
  }
  s.radical_basis = {{0, 1}};
  EXPECT_NO_THROW(FDAlgebra<PrimeField>::create(s));
}

TEST(Quotient, ByCommutatorIdeal) {
  auto q = make_qci(5, 2);
  auto i = ideal_closure(q.algebra, commutator_space(q.algebra));
  auto d = quotient_algebra(q.algebra, i, "ab");
  EXPECT_EQ(commutator_space(d).dim(), 0u);
  EXPECT_EQ(center(d).dim(), d.dim());
}
