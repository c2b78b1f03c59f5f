#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qci/hermite.hpp"

using namespace qci;

namespace {

IntMatrix ints(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    IntRow row;
    for (auto x : r) row.emplace_back(x);
    m.push_back(row);
  }
  return m;
}

// Brute force: is v in the integer row span of m? Searches small coefficient boxes.
bool in_lattice_bruteforce(const IntMatrix& m, const IntRow& v, int box) {
  const std::size_t k = m.size();
  std::vector<int> c(k, -box);
  while (true) {
    bool eq = true;
    for (std::size_t j = 0; j < v.size() && eq; ++j) {
      BigInt s = 0;
      for (std::size_t i = 0; i < k; ++i) s += c[i] * m[i][j];
      eq = (s == v[j]);
    }
    if (eq) return true;
    std::size_t i = 0;
    while (i < k && c[i] == box) c[i++] = -box;
    if (i == k) return false;
    ++c[i];
  }
}

}  // namespace

TEST(Hermite, AlreadyNormal) {
  EXPECT_EQ(hermite_normal_form(ints({{2, 0}, {0, 3}}), 2), ints({{2, 0}, {0, 3}}));
}

TEST(Hermite, TwoByTwo) {
  IntMatrix in = ints({{1, 2}, {3, 4}});
  IntMatrix h = hermite_normal_form(in, 2);
  EXPECT_EQ(h, ints({{1, 0}, {0, 2}}));
  // |det| preserved (unimodular row operations)
  BigInt det_in = in[0][0] * in[1][1] - in[0][1] * in[1][0];
  BigInt det_h = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  EXPECT_EQ(abs(det_in), abs(det_h));
  // Same lattice both ways, by bounded brute force.
  for (const auto& r : in) EXPECT_TRUE(in_lattice_bruteforce(h, r, 6));
  for (const auto& r : h) EXPECT_TRUE(in_lattice_bruteforce(in, r, 6));
}

TEST(Hermite, RowPermutationInvariance) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 30; ++t) {
    IntMatrix m(5, IntRow(4));
    for (auto& r : m)
      for (auto& x : r) x = d(rng);
    IntMatrix h = hermite_normal_form(m, 4);
    std::shuffle(m.begin(), m.end(), rng);
    EXPECT_EQ(hermite_normal_form(m, 4), h);
    // Output shape: positive pivots, reduced entries above pivots.
    auto piv = hnf_pivots(h);
    for (std::size_t i = 0; i < h.size(); ++i) {
      EXPECT_GT(h[i][piv[i]], 0);
      if (i > 0) EXPECT_GT(piv[i], piv[i - 1]);
      for (std::size_t r = 0; r < i; ++r) {
        EXPECT_GE(h[r][piv[i]], 0);
        EXPECT_LT(h[r][piv[i]], h[i][piv[i]]);
      }
    }
  }
}

TEST(Hermite, LatticeMembershipAgreesWithBruteForce) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    IntMatrix m(2, IntRow(3));
    for (auto& r : m)
      for (auto& x : r) x = d(rng);
    IntMatrix h = hermite_normal_form(m, 3);
    for (const auto& r : h) EXPECT_TRUE(in_lattice_bruteforce(m, r, 8));
    for (const auto& r : m) EXPECT_TRUE(in_lattice_bruteforce(h, r, 8));
  }
}

TEST(Hermite, RejectsNonIntegerRationalInput) {
  RationalField q;
  Matrix<RationalField> m(q, 1, 2);
  m(0, 0) = Rational(1, 2);
  try {
    (void)hermite_normal_form(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}
