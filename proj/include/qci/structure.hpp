#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qci/algebra.hpp"
#include "qci/error.hpp"
#include "qci/linalg.hpp"

namespace qci {

/// Elements commuting with every generator, i.e. Z(A).
template <Field F>
Subspace<F> center(const FDAlgebra<F>& a) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  EchelonBuilder<F> eq(f, n);
  for (auto g : a.generating_set()) {
    // row k of  z b_g - b_g z  as a functional in the coordinates of z
    std::vector<SparseVec<F>> rows(n);
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& [k, t] : a.product(l, g)) rows[k].emplace_back(static_cast<std::uint32_t>(l), t);
      for (const auto& [k, t] : a.product(g, l)) rows[k].emplace_back(static_cast<std::uint32_t>(l), f.neg(t));
    }
    for (const auto& r : rows) eq.add_sparse(r);
  }
  return eq.kernel();
}

template <Field F>
bool is_central(const FDAlgebra<F>& a, std::span<const typename F::value_type> z) {
  for (auto g : a.generating_set()) {
    Vec<F> e = a.basis_vector(g);
    if (a.multiply(z, e) != a.multiply(e, z)) return false;
  }
  return true;
}

/// [A, A] = span of b_i b_j - b_j b_i.
template <Field F>
Subspace<F> commutator_space(const FDAlgebra<F>& a) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  EchelonBuilder<F> b(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVec<F> v = a.product(i, j);
      for (const auto& [k, t] : a.product(j, i)) v.emplace_back(k, f.neg(t));
      b.add_sparse(v);
      if (b.full()) return b.subspace();
    }
  return b.subspace();
}

/// Span of all products u v with u in U, v in V.
template <Field F>
Subspace<F> product_space(const FDAlgebra<F>& a, const Subspace<F>& u, const Subspace<F>& v) {
  EchelonBuilder<F> b(a.field(), a.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      b.add(a.multiply(u.basis().row(i), v.basis().row(j)));
      if (b.full()) return b.subspace();
    }
  return b.subspace();
}

/// J(A)^r for r >= 1 (J(A)^0 = A is accepted as well).
template <Field F>
Subspace<F> radical_power(const FDAlgebra<F>& a, std::size_t r) {
  if (r == 0) return Subspace<F>::whole(a.field(), a.dim());
  Subspace<F> power = a.radical();
  for (std::size_t k = 1; k < r && !power.is_zero(); ++k) power = product_space(a, power, a.radical());
  return power;
}

/// U^perp = {a : s(a u) = 0 for all u in U}.
template <Field F>
Subspace<F> perp(const FDAlgebra<F>& a, const Subspace<F>& u) {
  require(a.has_form(), ErrorKind::NotSymmetric, "perp needs a symmetrising form");
  require(u.ambient_dim() == a.dim(), ErrorKind::DimensionMismatch, "subspace is not in the algebra");
  Matrix<F> g = a.gram();
  EchelonBuilder<F> eq(a.field(), a.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) eq.add(matvec(g, u.basis().row(r)));
  return eq.kernel();
}

/// soc^n(A) = (J(A)^n)^perp.
template <Field F>
Subspace<F> socle_layer(const FDAlgebra<F>& a, std::size_t n) {
  require(a.has_form(), ErrorKind::NotSymmetric, "socle layers are computed through the symmetrising form");
  return perp(a, radical_power(a, n));
}

/// Right annihilator {v in W : u v = 0 and v u = 0 for u in U} restricted to W.
template <Field F>
Subspace<F> annihilator_in(const FDAlgebra<F>& a, const Subspace<F>& w, const Subspace<F>& u) {
  const F& f = a.field();
  EchelonBuilder<F> eq(f, w.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    std::vector<Vec<F>> left, right;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      left.push_back(a.multiply(u.basis().row(r), w.basis().row(i)));
      right.push_back(a.multiply(w.basis().row(i), u.basis().row(r)));
    }
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Vec<F> rl(w.dim()), rr(w.dim());
      for (std::size_t i = 0; i < w.dim(); ++i) {
        rl[i] = left[i][k];
        rr[i] = right[i][k];
      }
      eq.add(rl);
      eq.add(rr);
    }
  }
  Subspace<F> coeffs = eq.kernel();
  std::vector<Vec<F>> gens;
  for (std::size_t r = 0; r < coeffs.dim(); ++r) {
    Vec<F> v(a.dim(), f.zero());
    for (std::size_t i = 0; i < w.dim(); ++i) axpy(f, coeffs.basis()(r, i), w.basis().row(i), std::span(v));
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(f, a.dim(), gens);
}

/// J(Z(A)) = Z(A) ∩ J(A).
template <Field F>
Subspace<F> center_radical(const FDAlgebra<F>& a) {
  return intersection(center(a), a.radical());
}

/// soc(Z(A)): central elements killed by J(Z(A)).
template <Field F>
Subspace<F> center_socle(const FDAlgebra<F>& a) {
  return annihilator_in(a, center(a), center_radical(a));
}

/// Is U stable under left and right multiplication by A?
template <Field F>
bool is_two_sided_ideal(const FDAlgebra<F>& a, const Subspace<F>& u) {
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (auto g : a.generating_set()) {
      if (!u.contains(a.left_basis(g, u.basis().row(r)))) return false;
      if (!u.contains(a.right_basis(u.basis().row(r), g))) return false;
    }
  return true;
}

/// Two-sided ideal generated by U.
template <Field F>
Subspace<F> ideal_closure(const FDAlgebra<F>& a, const Subspace<F>& u) {
  EchelonBuilder<F> b(a.field(), a.dim());
  std::vector<Vec<F>> frontier;
  for (std::size_t r = 0; r < u.dim(); ++r)
    if (b.add(u.basis().row(r))) frontier.push_back(u.basis_vector(r));
  while (!frontier.empty()) {
    std::vector<Vec<F>> next;
    for (const auto& w : frontier)
      for (auto g : a.generating_set()) {
        Vec<F> l = a.left_basis(g, w), r = a.right_basis(w, g);
        if (b.add(l)) next.push_back(std::move(l));
        if (b.add(r)) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return b.subspace();
}

/// A / I for a two-sided ideal I. Coordinates of the quotient are the
/// non-pivot coordinates of I's canonical basis; the radical is the image
/// of J(A).
template <Field F>
FDAlgebra<F> quotient_algebra(const FDAlgebra<F>& a, const Subspace<F>& ideal, std::string name,
                              std::optional<std::size_t> simple_count = std::nullopt) {
  require(is_two_sided_ideal(a, ideal), ErrorKind::NotABimodule, "quotient by a subspace that is not an ideal");
  const F& f = a.field();
  const std::size_t n = a.dim();
  std::vector<char> is_pivot(n, 0);
  for (auto c : ideal.pivots()) is_pivot[c] = 1;
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> pos(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      pos[c] = static_cast<std::int64_t>(keep.size());
      keep.push_back(c);
    }
  const std::size_t m = keep.size();
  auto project = [&](std::span<const typename F::value_type> v) {
    Vec<F> red = ideal.reduce(v);
    Vec<F> out(m, f.zero());
    for (std::size_t c = 0; c < n; ++c)
      if (pos[c] >= 0) out[static_cast<std::size_t>(pos[c])] = red[c];
    return out;
  };
  AlgebraSpec<F> spec{f, std::move(name), {}, {}, {}, std::nullopt, {}, simple_count.value_or(a.simple_count()), {}};
  for (auto c : keep) spec.labels.push_back(a.label(c));
  spec.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec<F> prod(n, f.zero());
      for (const auto& [k, t] : a.product(keep[i], keep[j])) prod[k] = t;
      Vec<F> q = project(prod);
      for (std::size_t k = 0; k < m; ++k)
        if (!f.is_zero(q[k])) spec.table[i * m + j].emplace_back(static_cast<std::uint32_t>(k), q[k]);
    }
  spec.unit = project(a.unit());
  for (std::size_t r = 0; r < a.radical().dim(); ++r) spec.radical_basis.push_back(project(a.radical().basis().row(r)));
  // Images of generators that are still basis vectors of the quotient.
  bool gens_ok = true;
  for (auto g : a.generators()) {
    if (pos[g] < 0) {
      gens_ok = false;
      break;
    }
    spec.generators.push_back(static_cast<std::size_t>(pos[g]));
  }
  if (!gens_ok) spec.generators.clear();
  return FDAlgebra<F>::create(std::move(spec));
}

}  // namespace qci
