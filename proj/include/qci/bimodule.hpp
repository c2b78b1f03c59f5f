#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qci/algebra.hpp"
#include "qci/derivation.hpp"
#include "qci/error.hpp"
#include "qci/linalg.hpp"
#include "qci/structure.hpp"

namespace qci {

/// A sub- or quotient bimodule of A, described by a subspace U of A.
template <Field F>
struct BimoduleSpec {
  enum class Kind { Sub, Quotient };
  Kind kind = Kind::Sub;
  Subspace<F> subspace;

  static BimoduleSpec sub(Subspace<F> u) { return {Kind::Sub, std::move(u)}; }
  static BimoduleSpec quotient(Subspace<F> u) { return {Kind::Quotient, std::move(u)}; }
  static BimoduleSpec whole(const FDAlgebra<F>& a) {
    return {Kind::Sub, Subspace<F>::whole(a.field(), a.dim())};
  }
};

/// Concrete bimodule: basis of size m, and matrices for the left and right
/// action of every basis element of A (column c = image of basis vector c).
template <Field F>
struct BimoduleRep {
  FDAlgebra<F> algebra;
  std::size_t dim = 0;
  std::vector<Matrix<F>> left;
  std::vector<Matrix<F>> right;
};

template <Field F>
bool is_bimodule(const FDAlgebra<F>& a, const Subspace<F>& u) {
  return is_two_sided_ideal(a, u);
}

template <Field F>
BimoduleRep<F> represent(const FDAlgebra<F>& a, const BimoduleSpec<F>& spec) {
  using T = typename F::value_type;
  const F& f = a.field();
  const std::size_t n = a.dim();
  const Subspace<F>& u = spec.subspace;
  require(u.ambient_dim() == n, ErrorKind::DimensionMismatch, "bimodule subspace not in A");
  require(is_bimodule(a, u), ErrorKind::NotABimodule, "subspace is not stable under both actions");
  if (spec.kind == BimoduleSpec<F>::Kind::Sub) {
    const std::size_t m = u.dim();
    BimoduleRep<F> rep{a, m, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      Matrix<F> l(f, m, m), rt(f, m, m);
      for (std::size_t r = 0; r < m; ++r) {
        Vec<F> lv = a.left_basis(i, u.basis().row(r));
        Vec<F> rv = a.right_basis(u.basis().row(r), i);
        Vec<F> lc = u.coordinates(std::span<const T>(lv)), rc = u.coordinates(std::span<const T>(rv));
        for (std::size_t k = 0; k < m; ++k) {
          l(k, r) = lc[k];
          rt(k, r) = rc[k];
        }
      }
      rep.left.push_back(std::move(l));
      rep.right.push_back(std::move(rt));
    }
    return rep;
  }
  // Quotient: coordinates on the non-pivot columns of U.
  std::vector<char> is_pivot(n, 0);
  for (auto c : u.pivots()) is_pivot[c] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const std::size_t m = keep.size();
  BimoduleRep<F> rep{a, m, {}, {}};
  auto project = [&](std::span<const T> v) {
    Vec<F> red = u.reduce(v);
    Vec<F> out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = red[keep[k]];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<F> l(f, m, m), rt(f, m, m);
    for (std::size_t k = 0; k < m; ++k) {
      Vec<F> lv = project(std::span<const T>(a.left_basis(i, a.basis_vector(keep[k]))));
      Vec<F> rv = project(std::span<const T>(a.right_basis(a.basis_vector(keep[k]), i)));
      for (std::size_t r = 0; r < m; ++r) {
        l(r, k) = lv[r];
        rt(r, k) = rv[r];
      }
    }
    rep.left.push_back(std::move(l));
    rep.right.push_back(std::move(rt));
  }
  return rep;
}

/// Hom_{A^e}(M, N): linear maps phi (stored row-major as an m_N x m_M
/// matrix, coordinate r*m_M + c) with phi(a u) = a phi(u), phi(u a) = phi(u) a.
template <Field F>
Subspace<F> bimodule_hom(const FDAlgebra<F>& a, const BimoduleSpec<F>& m_spec, const BimoduleSpec<F>& n_spec) {
  require(a.dim() <= kGenericScaleLimit, ErrorKind::ScaleLimitExceeded,
          "bimodule Hom solves limited to dimension " + std::to_string(kGenericScaleLimit));
  const F& f = a.field();
  BimoduleRep<F> mr = represent(a, m_spec), nr = represent(a, n_spec);
  const std::size_t dm = mr.dim, dn = nr.dim;
  EchelonBuilder<F> eq(f, dm * dn);
  auto var = [dm](std::size_t r, std::size_t c) { return static_cast<std::uint32_t>(r * dm + c); };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (int side = 0; side < 2; ++side) {
      const Matrix<F>& am = side == 0 ? mr.left[i] : mr.right[i];
      const Matrix<F>& an = side == 0 ? nr.left[i] : nr.right[i];
      // (Phi * am - an * Phi)(r, c) = 0
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) {
          SparseVec<F> row;
          for (std::size_t k = 0; k < dm; ++k)
            if (!f.is_zero(am(k, c))) row.emplace_back(var(r, k), am(k, c));
          for (std::size_t k = 0; k < dn; ++k)
            if (!f.is_zero(an(r, k))) row.emplace_back(var(k, c), f.neg(an(r, k)));
          if (!row.empty()) eq.add_sparse(row);
        }
    }
  return eq.kernel();
}

template <Field F>
struct CoefficientDerivations {
  Subspace<F> der;   // D : A -> M, coordinate l*m + k = coefficient k of D(b_l)
  Subspace<F> ider;  // a -> u a - a u, u in M
  std::size_t h1_dim() const { return der.dim() - ider.dim(); }
};

/// Der(A, M), IDer(A, M) and dim H^1(A; M) from the full Leibniz system.
template <Field F>
CoefficientDerivations<F> derivations_with_coefficients(const FDAlgebra<F>& a, const BimoduleSpec<F>& spec) {
  const std::size_t n = a.dim();
  require(n <= kGenericScaleLimit, ErrorKind::ScaleLimitExceeded,
          "coefficient derivations limited to dimension " + std::to_string(kGenericScaleLimit));
  const F& f = a.field();
  BimoduleRep<F> rep = represent(a, spec);
  const std::size_t m = rep.dim;
  auto var = [m](std::size_t l, std::size_t k) { return static_cast<std::uint32_t>(l * m + k); };
  EchelonBuilder<F> eq(f, n * m);
  std::vector<SparseVec<F>> rows(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (auto& r : rows) r.clear();
      // D(b_i b_j) - b_i D(b_j) - D(b_i) b_j
      for (const auto& [s, t] : a.product(i, j))
        for (std::size_t k = 0; k < m; ++k) rows[k].emplace_back(var(s, k), t);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t c = 0; c < m; ++c) {
          if (!f.is_zero(rep.left[i](k, c))) rows[k].emplace_back(var(j, c), f.neg(rep.left[i](k, c)));
          if (!f.is_zero(rep.right[j](k, c))) rows[k].emplace_back(var(i, c), f.neg(rep.right[j](k, c)));
        }
      for (const auto& r : rows)
        if (!r.empty()) eq.add_sparse(r);
    }
  Subspace<F> der = eq.kernel();
  EchelonBuilder<F> inner(f, n * m);
  for (std::size_t c = 0; c < m; ++c) {
    // u = basis vector c of M; D(b_l) = u b_l - b_l u
    Vec<F> v(n * m, f.zero());
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < m; ++k) v[l * m + k] = f.sub(rep.right[l](k, c), rep.left[l](k, c));
    inner.add(v);
  }
  return {std::move(der), inner.subspace()};
}

}  // namespace qci
