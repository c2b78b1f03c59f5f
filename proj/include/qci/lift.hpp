#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "qci/chebyshev.hpp"
#include "qci/constructions.hpp"
#include "qci/hermite.hpp"
#include "qci/structure.hpp"

namespace qci {

using QAlgebra = FDAlgebra<RationalField>;

/// Q<gamma, delta | gamma delta + delta gamma = 0, f_p(gamma) = f_p(delta) = 0>
/// on the monomials gamma^i delta^j (index i*p + j).
struct LiftedAlgebra {
  QAlgebra algebra;
  std::uint32_t p;
  IntPolynomial f;
  std::size_t index(std::size_t i, std::size_t j) const { return i * p + j; }
};

namespace detail {

/// Coefficients of u^m modulo the monic polynomial f, for m < 2 deg f - 1.
inline std::vector<std::vector<BigInt>> power_reductions(const IntPolynomial& f, std::size_t count) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> cur(d, 0);
  cur[0] = 1;
  for (std::size_t m = 0; m < count; ++m) {
    out.push_back(cur);
    // multiply by u, then replace u^d by -(f - u^d)
    BigInt top = cur[d - 1];
    for (std::size_t k = d - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    for (std::size_t k = 0; k < d; ++k) cur[k] -= top * f.coeff(k);
  }
  return out;
}

}  // namespace detail

inline LiftedAlgebra make_lifted_algebra(std::uint32_t p) {
  require(is_prime(p) && p >= 3, ErrorKind::InvalidParameters, "p must be an odd prime");
  const std::size_t n = static_cast<std::size_t>(p) * p;
  IntPolynomial f = normalized_f(p);
  auto red = detail::power_reductions(f, 2 * p - 1);
  RationalField q;
  AlgebraSpec<RationalField> spec{q, "lift(p=" + std::to_string(p) + ")", {}, std::vector<SparseVec<RationalField>>(n * n),
                                  Vec<RationalField>(n, Rational(0)), std::nullopt, {}, 1, {}};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) spec.labels.push_back(monomial_label("g", i, "d", j));
  auto idx = [p](std::size_t i, std::size_t j) { return i * p + j; };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l) {
          // g^i d^j g^k d^l = (-1)^{jk} g^{i+k} d^{j+l}
          const int sign = (j * k) % 2 ? -1 : 1;
          auto& entry = spec.table[idx(i, j) * n + idx(k, l)];
          for (std::size_t s = 0; s < p; ++s) {
            if (red[i + k][s] == 0) continue;
            for (std::size_t t = 0; t < p; ++t)
              if (red[j + l][t] != 0)
                entry.emplace_back(static_cast<std::uint32_t>(idx(s, t)), Rational(sign * red[i + k][s] * red[j + l][t]));
          }
        }
  spec.unit[0] = 1;
  spec.generators = {idx(1, 0), idx(0, 1)};
  // Over Q the algebra is semisimple (f_p is separable); the number of
  // simple modules is not used, 1 is a placeholder.
  return {QAlgebra::create(std::move(spec)), p, std::move(f)};
}

/// Reduction mod p of the (integral) structure constants.
inline bool reduces_to_qci(const LiftedAlgebra& l) {
  QciAlgebra q = make_qci(l.p, 2, l.p - 1);
  const std::size_t n = l.algebra.dim();
  const PrimeField& fp = q.algebra.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<PrimeField> lifted(n, 0), target(n, 0);
      for (const auto& [k, t] : l.algebra.product(i, j)) {
        if (denominator(t) != 1) return false;
        BigInt r = numerator(t) % l.p;
        if (r < 0) r += l.p;
        lifted[k] = fp.add(lifted[k], r.convert_to<std::uint32_t>());
      }
      for (const auto& [k, t] : q.algebra.product(i, j)) target[k] = t;
      if (lifted != target) return false;
    }
  return true;
}

inline std::vector<std::size_t> odd_commutator_monomials(std::uint32_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 1; j < p; ++j)
      if (i % 2 || j % 2) out.push_back(i * p + j);
  return out;
}

struct LiftedCommutators {
  Subspace<RationalField> span;  // rational span of all [b_i, b_j]
  IntMatrix hnf;                 // HNF of the integer lattice they generate
  bool matches_monomials = false;  // span = span of the listed monomials
  /// HNF rows sit on exactly those coordinates, each row a single entry
  /// prime to p. Over O (residue characteristic p) such entries are units,
  /// so the lattice is the O-span of the monomials: a pure sublattice.
  bool pure = false;
  std::vector<BigInt> pivots;
};

inline LiftedCommutators lifted_commutator_space(const LiftedAlgebra& l) {
  const auto& a = l.algebra;
  const std::size_t n = a.dim();
  RationalField q;
  IntMatrix gens;
  std::vector<Vec<RationalField>> rat;
  std::set<IntRow> seen;  // up to sign
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<RationalField> c = a.commutator(a.basis_vector(i), a.basis_vector(j));
      if (is_zero_vec(q, std::span<const Rational>(c))) continue;
      IntRow row(n);
      for (std::size_t k = 0; k < n; ++k) {
        require(denominator(c[k]) == 1, ErrorKind::PreconditionFailed, "non-integral commutator");
        row[k] = numerator(c[k]);
      }
      auto lead = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
      if (*lead < 0)
        for (auto& x : row) x = -x;
      if (!seen.insert(row).second) continue;
      gens.push_back(std::move(row));
      rat.push_back(std::move(c));
    }
  LiftedCommutators out{Subspace<RationalField>::span(q, n, rat), hermite_normal_form(gens, n), false, false, {}};
  std::vector<Vec<RationalField>> mono;
  auto wanted = odd_commutator_monomials(l.p);
  for (auto m : wanted) mono.push_back(a.basis_vector(m));
  out.matches_monomials = out.span == Subspace<RationalField>::span(q, n, mono);
  out.pure = out.hnf.size() == wanted.size();
  for (std::size_t r = 0; out.pure && r < wanted.size(); ++r) {
    const BigInt& d = out.hnf[r][wanted[r]];
    out.pivots.push_back(d);
    if (d == 0 || d % l.p == 0) out.pure = false;
    for (std::size_t c = 0; c < n; ++c)
      if (c != wanted[r] && out.hnf[r][c] != 0) out.pure = false;
  }
  return out;
}

/// Span of gamma^i delta^j with i, j >= 1.
inline Subspace<RationalField> mixed_monomial_ideal(const LiftedAlgebra& l) {
  std::vector<Vec<RationalField>> v;
  for (std::size_t i = 1; i < l.p; ++i)
    for (std::size_t j = 1; j < l.p; ++j) v.push_back(l.algebra.basis_vector(l.index(i, j)));
  return Subspace<RationalField>::span(RationalField{}, l.algebra.dim(), v);
}

/// A (gamma delta) or (gamma delta) A as a subspace.
inline Subspace<RationalField> one_sided_multiples(const LiftedAlgebra& l, bool left) {
  const auto& a = l.algebra;
  Vec<RationalField> gd = a.basis_vector(l.index(1, 1));
  std::vector<Vec<RationalField>> v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    v.push_back(left ? a.multiply(a.basis_vector(i), gd) : a.multiply(gd, a.basis_vector(i)));
  return Subspace<RationalField>::span(RationalField{}, a.dim(), v);
}

/// D = A / (gamma delta A), on 1, mu^i, nu^j.
inline QAlgebra commutative_quotient(const LiftedAlgebra& l) {
  return quotient_algebra(l.algebra, mixed_monomial_ideal(l), "D(p=" + std::to_string(l.p) + ")");
}

struct DModP {
  FDAlgebra<PrimeField> algebra;
  std::size_t socle_dim = 0;
  bool relations = false;      // mu nu = nu mu = 0, mu^p = nu^p = 0
  bool no_symmetric_form = false;  // socle columns of every Gram matrix are dependent
};

/// Reduces D mod p, checks its relations, and certifies that no
/// nondegenerate symmetric functional exists.
inline DModP check_D_mod_p_not_symmetric(const LiftedAlgebra& l) {
  const std::uint32_t p = l.p;
  QAlgebra d = commutative_quotient(l);
  const std::size_t n = d.dim();
  PrimeField fp(p);
  auto mod = [&](const Rational& t) {
    require(denominator(t) == 1, ErrorKind::PreconditionFailed, "non-integral structure constant");
    BigInt r = numerator(t) % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
  };
  AlgebraSpec<PrimeField> spec{fp, "D mod " + std::to_string(p), d.labels(), std::vector<SparseVec<PrimeField>>(n * n),
                               Vec<PrimeField>(n, 0), std::nullopt, {}, 1, d.generators()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, t] : d.product(i, j))
        if (mod(t)) spec.table[i * n + j].emplace_back(k, mod(t));
  for (std::size_t i = 0; i < n; ++i) spec.unit[i] = mod(d.unit()[i]);
  // the unit is 1 = b_0 in the quotient; the rest spans the radical mod p
  for (std::size_t i = 1; i < n; ++i) spec.radical_basis.push_back(unit_vec(fp, n, i));
  auto dp = FDAlgebra<PrimeField>::create(std::move(spec));

  // quotient basis: 1, nu, ..., nu^{p-1}, mu, ..., mu^{p-1} (labels g^i, d^j)
  const std::size_t mu = p, nu = 1;
  auto pow = [&](std::size_t b, std::size_t k) {
    Vec<PrimeField> v = dp.unit();
    for (std::size_t s = 0; s < k; ++s) v = dp.multiply(v, dp.basis_vector(b));
    return v;
  };
  Vec<PrimeField> zero(n, 0);
  bool rel = dp.multiply(dp.basis_vector(mu), dp.basis_vector(nu)) == zero &&
             dp.multiply(dp.basis_vector(nu), dp.basis_vector(mu)) == zero && pow(mu, p) == zero && pow(nu, p) == zero;

  Subspace<PrimeField> soc = annihilator_in(dp, Subspace<PrimeField>::whole(fp, n), dp.radical());

  // Gram(s) v for v in soc has entries s(b_i v), linear in s. Every 2x2
  // minor of [Gram(s) v_1 | Gram(s) v_2] must vanish as a quadratic form.
  bool dependent = soc.dim() >= 2;
  if (dependent) {
    std::vector<std::vector<Vec<PrimeField>>> cols(2);  // cols[c][i] = coefficients of s in entry i
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < n; ++i) cols[c].push_back(dp.multiply(dp.basis_vector(i), soc.basis().row(c)));
    for (std::size_t i = 0; dependent && i < n; ++i)
      for (std::size_t j = i + 1; dependent && j < n; ++j)
        for (std::size_t u = 0; dependent && u < n; ++u)
          for (std::size_t v = u; dependent && v < n; ++v) {
            // coefficient of s_u s_v in L_i1 L_j2 - L_i2 L_j1
            auto term = [&](const Vec<PrimeField>& x, const Vec<PrimeField>& y) {
              std::uint32_t t = fp.mul(x[u], y[v]);
              if (u != v) t = fp.add(t, fp.mul(x[v], y[u]));
              return t;
            };
            if (fp.sub(term(cols[0][i], cols[1][j]), term(cols[1][i], cols[0][j])) != 0) dependent = false;
          }
  }
  return {dp, soc.dim(), rel, dependent};
}

inline DModP check_D_mod_p_not_symmetric(std::uint32_t p) {
  return check_D_mod_p_not_symmetric(make_lifted_algebra(p));
}

/// Largest Gram rank over all functionals (exhaustive; small p only).
inline std::size_t max_gram_rank_exhaustive(const FDAlgebra<PrimeField>& a) {
  const std::size_t n = a.dim();
  const std::uint32_t p = a.field().modulus();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    require(total <= 1000000, ErrorKind::ScaleLimitExceeded, "too many functionals to enumerate");
  }
  std::size_t best = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Vec<PrimeField> s(n);
    std::size_t c = code;
    for (auto& x : s) {
      x = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    Matrix<PrimeField> g(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, t] : a.product(i, j)) g(i, j) = a.field().add(g(i, j), a.field().mul(t, s[k]));
    best = std::max(best, rank(g));
  }
  return best;
}

}  // namespace qci
