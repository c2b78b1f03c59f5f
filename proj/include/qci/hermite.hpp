#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qci/error.hpp"
#include "qci/field.hpp"
#include "qci/linalg.hpp"

namespace qci {

using IntRow = std::vector<BigInt>;
using IntMatrix = std::vector<IntRow>;

namespace detail {

/// g = s*a + t*b with g = gcd(a, b) >= 0.
inline void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

/// Row-style Hermite normal form of the lattice spanned by the rows:
/// upper echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is a lattice basis and
/// two generating sets span the same lattice iff their HNFs agree.
inline IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t cols) {
  std::vector<std::pair<std::size_t, IntRow>> basis;  // (pivot column, row), sorted by pivot
  for (const auto& input : rows) {
    require(input.size() == cols, ErrorKind::DimensionMismatch, "ragged integer matrix");
    IntRow v = input;
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      while (k < basis.size() && basis[k].first < c) ++k;
      if (k < basis.size() && basis[k].first == c) {
        IntRow& b = basis[k].second;
        if (v[c] % b[c] == 0) {
          BigInt q = v[c] / b[c];
          for (std::size_t j = c; j < cols; ++j) v[j] -= q * b[j];
        } else {
          BigInt g, s, t;
          detail::ext_gcd(b[c], v[c], g, s, t);
          BigInt bc = b[c] / g, vc = v[c] / g;
          IntRow nb(cols), nv(cols);
          for (std::size_t j = 0; j < cols; ++j) {
            nb[j] = s * b[j] + t * v[j];
            nv[j] = bc * v[j] - vc * b[j];
          }
          b = std::move(nb);
          v = std::move(nv);
        }
        continue;
      }
      basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(k), {c, std::move(v)});
      break;
    }
  }
  for (auto& [piv, row] : basis)
    if (row[piv] < 0)
      for (auto& x : row) x = -x;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t piv = basis[i].first;
    const IntRow& pr = basis[i].second;
    for (std::size_t r = 0; r < i; ++r) {
      IntRow& row = basis[r].second;
      BigInt q = detail::floor_div(row[piv], pr[piv]);
      if (q == 0) continue;
      for (std::size_t j = piv; j < cols; ++j) row[j] -= q * pr[j];
    }
  }
  IntMatrix out;
  out.reserve(basis.size());
  for (auto& [piv, row] : basis) out.push_back(std::move(row));
  return out;
}

/// HNF of a rational matrix whose entries must all be integers.
inline Matrix<RationalField> hermite_normal_form(const Matrix<RationalField>& m) {
  IntMatrix rows(m.rows(), IntRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      require(denominator(x) == 1, ErrorKind::DomainMismatch, "HNF requires integer entries");
      rows[r][c] = numerator(x);
    }
  IntMatrix h = hermite_normal_form(rows, m.cols());
  Matrix<RationalField> out(m.field(), h.size(), m.cols());
  for (std::size_t r = 0; r < h.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(h[r][c]);
  return out;
}

/// Pivot column of each HNF row.
inline std::vector<std::size_t> hnf_pivots(const IntMatrix& h) {
  std::vector<std::size_t> piv;
  for (const auto& row : h)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        piv.push_back(c);
        break;
      }
  return piv;
}

}  // namespace qci
