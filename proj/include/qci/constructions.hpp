#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qci/algebra.hpp"
#include "qci/error.hpp"
#include "qci/field.hpp"
#include "qci/number_theory.hpp"

namespace qci {

inline std::string monomial_label(const std::string& x, std::size_t i, const std::string& y, std::size_t j) {
  std::string s;
  if (i > 0) s += i == 1 ? x : x + "^" + std::to_string(i);
  if (j > 0) s += j == 1 ? y : y + "^" + std::to_string(j);
  return s.empty() ? "1" : s;
}

/// k<x, y | x^p = y^p = 0, yx = q xy> over F_p, q of order e.
struct QciAlgebra {
  FDAlgebra<PrimeField> algebra;
  std::uint32_t p;
  std::uint32_t e;
  std::uint32_t q;

  /// Basis index of x^i y^j.
  std::size_t index(std::size_t i, std::size_t j) const { return i * p + j; }
  std::size_t dim() const { return algebra.dim(); }
};

/// The default q: g^((p-1)/e) for the least primitive root g.
inline std::uint32_t default_q(std::uint32_t p, std::uint32_t e) {
  return static_cast<std::uint32_t>(pow_mod(least_primitive_root(p), (p - 1) / e, p));
}

inline void validate_qci_parameters(std::uint32_t p, std::uint32_t e, std::optional<std::uint32_t> q) {
  require(is_prime(p) && p > 2, ErrorKind::InvalidParameters, "p must be an odd prime");
  require(e >= 2, ErrorKind::InvalidParameters, "e must be at least 2");
  require((p - 1) % e == 0, ErrorKind::InvalidParameters, "e must divide p-1");
  if (q) {
    require(*q > 0 && *q < p, ErrorKind::InvalidParameters, "q must be a nonzero residue mod p");
    require(multiplicative_order(*q, p) == e, ErrorKind::InvalidParameters, "q must have multiplicative order e");
  }
}

inline QciAlgebra make_qci(std::uint32_t p, std::uint32_t e, std::optional<std::uint32_t> q_opt = std::nullopt) {
  validate_qci_parameters(p, e, q_opt);
  const std::uint32_t q = q_opt.value_or(default_q(p, e));
  PrimeField f(p);
  const std::size_t n = static_cast<std::size_t>(p) * p;
  AlgebraSpec<PrimeField> spec{f, "QCI(p=" + std::to_string(p) + ",e=" + std::to_string(e) + ",q=" + std::to_string(q) + ")",
                               {}, std::vector<SparseVec<PrimeField>>(n * n), Vec<PrimeField>(n, 0), std::nullopt, {}, 1, {}};
  auto idx = [p](std::size_t i, std::size_t j) { return i * p + j; };
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) spec.labels.push_back(monomial_label("x", a, "y", b));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c + a < p; ++c)
        for (std::size_t d = 0; d + b < p; ++d) {
          // (x^a y^b)(x^c y^d) = q^{bc} x^{a+c} y^{b+d}
          auto coef = static_cast<std::uint32_t>(pow_mod(q, b * c, p));
          spec.table[idx(a, b) * n + idx(c, d)].emplace_back(static_cast<std::uint32_t>(idx(a + c, b + d)), coef);
        }
  spec.unit[0] = 1;
  Vec<PrimeField> form(n, 0);
  form[idx(p - 1, p - 1)] = 1;
  spec.form = form;
  for (std::size_t i = 1; i < n; ++i) spec.radical_basis.push_back(unit_vec(f, n, i));
  spec.generators = {idx(1, 0), idx(0, 1)};
  return QciAlgebra{FDAlgebra<PrimeField>::create(std::move(spec)), p, e, q};
}

/// Group algebra of C_p ⋊ C_{p-1} = <a> ⋊ <c>, c a c^-1 = a^g, over F_p.
struct GroupAlgebra {
  FDAlgebra<PrimeField> algebra;
  std::uint32_t p;
  std::uint32_t g;

  /// Basis index of a^i c^j.
  std::size_t index(std::size_t i, std::size_t j) const { return i * (p - 1) + j; }
};

inline GroupAlgebra make_group_algebra_cp_cpm1(std::uint32_t p) {
  require(is_prime(p) && p >= 3, ErrorKind::InvalidParameters, "p must be an odd prime");
  const std::uint32_t g = static_cast<std::uint32_t>(least_primitive_root(p));
  const std::size_t m = p - 1;
  const std::size_t n = static_cast<std::size_t>(p) * m;
  PrimeField f(p);
  auto idx = [m](std::size_t i, std::size_t j) { return i * m + j; };
  std::vector<std::uint64_t> gpow(m);
  for (std::size_t j = 0; j < m; ++j) gpow[j] = pow_mod(g, j, p);
  AlgebraSpec<PrimeField> spec{f, "kG(p=" + std::to_string(p) + ")", {}, std::vector<SparseVec<PrimeField>>(n * n),
                               Vec<PrimeField>(n, 0), std::nullopt, {}, m, {}};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j) spec.labels.push_back(monomial_label("a", i, "c", j));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          std::size_t ni = (i + k * gpow[j]) % p;
          std::size_t nj = (j + l) % m;
          spec.table[idx(i, j) * n + idx(k, l)].emplace_back(static_cast<std::uint32_t>(idx(ni, nj)), 1);
        }
  spec.unit[0] = 1;
  Vec<PrimeField> form(n, 0);
  form[0] = 1;
  spec.form = form;
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec<PrimeField> v(n, 0);
      v[idx(i, j)] = 1;
      v[idx(0, j)] = f.neg(1);
      spec.radical_basis.push_back(std::move(v));
    }
  spec.generators = {idx(1, 0), idx(0, 1)};
  return GroupAlgebra{FDAlgebra<PrimeField>::create(std::move(spec)), p, g};
}

}  // namespace qci
