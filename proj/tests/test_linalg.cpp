#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qci/linalg.hpp"

using namespace qci;

namespace {

using M = Matrix<PrimeField>;

// Laplace expansion; independent of any elimination code.
std::uint32_t det_laplace(const PrimeField& f, const std::vector<std::vector<std::uint32_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::uint32_t acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<std::uint32_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::uint32_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    std::uint32_t term = f.mul(a[0][c], det_laplace(f, minor));
    acc = (c % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const M& m) {
  const PrimeField& f = m.field();
  std::size_t best = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(m.rows(), k, 0, cur, rs);
    choose(m.cols(), k, 0, cur, cs);
    bool found = false;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<std::uint32_t>> sub(k, std::vector<std::uint32_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        if (det_laplace(f, sub) != 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    best = k;
  }
  return best;
}

M random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937& rng, double zero_bias = 0.0) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  std::bernoulli_distribution z(zero_bias);
  M m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) ? 0 : d(rng);
  return m;
}

}  // namespace

TEST(Rref, SmallExampleOverF5) {
  PrimeField f(5);
  M m = M::from_ints(f, {{2, 4}, {1, 2}});
  EXPECT_EQ(rref(m), M::from_ints(f, {{1, 2}, {0, 0}}));
}

TEST(Rref, IdentityIsFixed) {
  PrimeField f(7);
  EXPECT_EQ(rref(M::identity(f, 4)), M::identity(f, 4));
}

TEST(Rref, RankAgreesWithMinorOracle) {
  PrimeField f(7);
  std::mt19937 rng(11);
  M big = random_matrix(f, 20, 20, rng, 0.5);
  std::uniform_int_distribution<std::size_t> pick(0, 19);
  for (int trial = 0; trial < 60; ++trial) {
    // random 5x5 submatrix, sometimes with a forced dependent row
    std::vector<std::size_t> rows, cols;
    while (rows.size() < 5) {
      auto r = pick(rng);
      if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
    }
    while (cols.size() < 5) {
      auto c = pick(rng);
      if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    M sub(f, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) sub(i, j) = big(rows[i], cols[j]);
    if (trial % 3 == 0)
      for (std::size_t j = 0; j < 5; ++j) sub(4, j) = f.add(sub(0, j), f.mul(3, sub(1, j)));
    EXPECT_EQ(rank(sub), minor_rank(sub)) << "trial " << trial;
    EXPECT_EQ(rank(rref(sub)), rank(sub));
  }
  // Rank of the full 20x20 matches a product of known inner dimension.
  M u = random_matrix(f, 20, 6, rng), v = random_matrix(f, 6, 20, rng);
  M low = u * v;
  EXPECT_LE(rank(low), 6u);
  EXPECT_LE(rank(low), std::min(rank(u), rank(v)));
}

TEST(Rref, Idempotent) {
  PrimeField f(5);
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    M m = random_matrix(f, 6, 8, rng, 0.4);
    EXPECT_EQ(rref(rref(m)), rref(m));
  }
}

TEST(Rref, RationalEntries) {
  RationalField q;
  auto m = Matrix<RationalField>::from_ints(q, {{2, 4, 1}, {1, 2, 0}});
  auto r = rref(m);
  EXPECT_EQ(r(0, 0), Rational(1));
  EXPECT_EQ(r(0, 1), Rational(2));
  EXPECT_EQ(r(0, 2), Rational(0));
  EXPECT_EQ(r(1, 2), Rational(1));
}

TEST(Nullspace, ZeroAndIdentity) {
  PrimeField f(3);
  EXPECT_EQ(nullspace(M(f, 3, 3)).dim(), 3u);
  EXPECT_EQ(nullspace(M::identity(f, 3)).dim(), 0u);
}

TEST(Nullspace, RankNullityAndMembership) {
  PrimeField f(11);
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    M m = random_matrix(f, 5, 9, rng, 0.3);
    auto ns = nullspace(m);
    EXPECT_EQ(ns.dim() + rank(m), 9u);
    for (std::size_t r = 0; r < ns.dim(); ++r)
      EXPECT_TRUE(is_zero_vec(f, std::span<const std::uint32_t>(matvec(m, ns.basis().row(r)))));
  }
}

TEST(Matrix, MixedDomainsRejected) {
  M a = M::identity(PrimeField(5), 2), b = M::identity(PrimeField(7), 2);
  try {
    (void)(a * b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}

TEST(SubspaceOps, LatticeIdentities) {
  PrimeField f(5);
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    M a = random_matrix(f, 3, 7, rng, 0.3), b = random_matrix(f, 4, 7, rng, 0.3);
    std::vector<Vec<PrimeField>> ua, ub;
    for (std::size_t r = 0; r < 3; ++r) ua.push_back(a.row_vec(r));
    for (std::size_t r = 0; r < 4; ++r) ub.push_back(b.row_vec(r));
    auto u = Subspace<PrimeField>::span(f, 7, ua), v = Subspace<PrimeField>::span(f, 7, ub);
    EXPECT_EQ(intersection(u, u), u);
    EXPECT_EQ(sum(u, Subspace<PrimeField>::zero(f, 7)), u);
    EXPECT_EQ(sum(u, v).dim() + intersection(u, v).dim(), u.dim() + v.dim());
    EXPECT_TRUE(is_subspace_of(intersection(u, v), u));
    EXPECT_TRUE(is_subspace_of(intersection(u, v), v));
  }
}

TEST(SubspaceOps, CanonicalFormIsUnique) {
  PrimeField f(7);
  std::vector<Vec<PrimeField>> g{{1, 2, 3, 0}, {0, 1, 1, 1}, {1, 3, 4, 1}};
  std::vector<Vec<PrimeField>> h{{0, 3, 3, 3}, {2, 4, 6, 0}};
  EXPECT_EQ(Subspace<PrimeField>::span(f, 4, g), Subspace<PrimeField>::span(f, 4, h));
}

TEST(SubspaceOps, AmbientMismatch) {
  PrimeField f(3);
  try {
    (void)sum(Subspace<PrimeField>::whole(f, 2), Subspace<PrimeField>::whole(f, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Solve, ConsistentAndInconsistent) {
  PrimeField f(5);
  M m = M::from_ints(f, {{1, 1}, {2, 2}});
  Vec<PrimeField> ok{3, 1}, bad{3, 2};
  auto x = solve(m, std::span<const std::uint32_t>(ok));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(matvec(m, std::span<const std::uint32_t>(*x)), ok);
  EXPECT_FALSE(solve(m, std::span<const std::uint32_t>(bad)).has_value());
}

TEST(CoordinateSolverTest, RecoversCoefficients) {
  PrimeField f(7);
  std::vector<Vec<PrimeField>> fam{{1, 1, 0}, {0, 1, 1}};
  CoordinateSolver<PrimeField> cs(f, 3, fam);
  Vec<PrimeField> v{3, 5, 2};  // 3*(1,1,0) + 2*(0,1,1)
  EXPECT_EQ(cs.coordinates(std::span<const std::uint32_t>(v)), (Vec<PrimeField>{3, 2}));
  Vec<PrimeField> w{1, 0, 0};
  try {
    (void)cs.coordinates(std::span<const std::uint32_t>(w));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInSpan);
  }
}
