#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qci/derivation.hpp"
#include "qci/error.hpp"
#include "qci/linalg.hpp"
#include "qci/structure.hpp"

namespace qci {

/// Greedy complement of J(A)^2 in J(A), taken from the canonical basis of J(A).
template <Field F>
std::vector<Vec<F>> radical_complement(const FDAlgebra<F>& a) {
  EchelonBuilder<F> b(a.field(), a.dim());
  Subspace<F> j2 = radical_power(a, 2);
  for (std::size_t r = 0; r < j2.dim(); ++r) b.add(j2.basis().row(r));
  std::vector<Vec<F>> out;
  const auto& j = a.radical();
  for (std::size_t r = 0; r < j.dim(); ++r)
    if (b.add(j.basis().row(r))) out.push_back(j.basis_vector(r));
  return out;
}

template <Field F>
bool is_split_local(const FDAlgebra<F>& a) {
  return a.simple_count() == 1 && a.dim() - a.radical().dim() == 1;
}

namespace detail {

/// The linear map vanishing on 1 and J^2 with prescribed values on the
/// complement vectors xs. Returns nothing if {1} ∪ xs ∪ J^2 is not a basis.
template <Field F>
std::optional<std::vector<Vec<F>>> map_on_complement(const FDAlgebra<F>& a, const std::vector<Vec<F>>& xs,
                                                     const std::vector<Vec<F>>& values) {
  using T = typename F::value_type;
  const F& f = a.field();
  const std::size_t n = a.dim();
  Subspace<F> j2 = radical_power(a, 2);
  std::vector<Vec<F>> family{a.unit()};
  for (const auto& x : xs) family.push_back(x);
  for (std::size_t r = 0; r < j2.dim(); ++r) family.push_back(j2.basis_vector(r));
  if (family.size() != n || Subspace<F>::span(f, n, family).dim() != n) return std::nullopt;
  CoordinateSolver<F> cs(f, n, family);
  std::vector<Vec<F>> images(n, Vec<F>(n, f.zero()));
  for (std::size_t l = 0; l < n; ++l) {
    Vec<F> c = cs.coordinates(std::span<const T>(a.basis_vector(l)));
    for (std::size_t i = 0; i < xs.size(); ++i) axpy(f, c[1 + i], std::span<const T>(values[i]), std::span<T>(images[l]));
  }
  return images;
}

}  // namespace detail

template <Field F>
struct SocleDerivation {
  Derivation<F> derivation;
  bool outer = false;
};

/// The map vanishing on 1 + J(A)^2 with f(u_i) = v_i, v_i in soc(A), for
/// u_i spanning a complement of J(A)^2 in J(A). Certified as a derivation
/// and tested for being outer.
template <Field F>
SocleDerivation<F> socle_valued_map(const FDAlgebra<F>& a, const std::vector<std::pair<Vec<F>, Vec<F>>>& values) {
  using T = typename F::value_type;
  auto bad = [](const std::string& why) { fail(ErrorKind::InvalidSocleMap, why); };
  if (!a.has_form()) bad("algebra is not symmetric");
  if (!is_split_local(a)) bad("algebra is not split local");
  Subspace<F> soc = socle_layer(a, 1);
  std::vector<Vec<F>> xs, vs;
  for (const auto& [u, v] : values) {
    if (u.size() != a.dim() || v.size() != a.dim()) bad("vector has wrong length");
    if (!a.radical().contains(std::span<const T>(u))) bad("argument is not in J(A)");
    if (!soc.contains(std::span<const T>(v))) bad("value is not in soc(A)");
    xs.push_back(u);
    vs.push_back(v);
  }
  auto images = detail::map_on_complement(a, xs, vs);
  if (!images) bad("arguments do not span a complement of J(A)^2 in J(A)");
  Derivation<F> d(a, std::move(*images));
  bool outer = !d.is_zero() && !inner_derivation_signatures(a).contains(std::span<const T>(d.signature()));
  return {std::move(d), outer};
}

/// Dual bases for the second-socle construction: x_i spans a complement of
/// J^2 in J, y_j in soc^2(A) with x_i y_j = y_j x_i = delta_ij z.
template <Field F>
struct SocleTwoPairing {
  std::vector<Vec<F>> xs;
  std::vector<Vec<F>> ys;
  Vec<F> z;
};

template <Field F>
SocleTwoPairing<F> socle_two_pairing(const FDAlgebra<F>& a) {
  using T = typename F::value_type;
  const F& f = a.field();
  const std::size_t n = a.dim();
  auto bad = [](const std::string& why) { fail(ErrorKind::PairingNotFound, why); };
  if (!a.has_form() || !is_split_local(a)) bad("algebra is not split local symmetric");
  Subspace<F> soc = socle_layer(a, 1), soc2 = socle_layer(a, 2);
  if (soc.dim() != 1) bad("socle is not one-dimensional");
  SocleTwoPairing<F> out{radical_complement(a), {}, soc.basis_vector(0)};
  const std::size_t r = out.xs.size(), s = soc2.dim();
  for (std::size_t j = 0; j < r; ++j) {
    // unknown y = sum_k c_k w_k over the basis w_k of soc^2
    Matrix<F> m(f, 0, s);
    Vec<F> rhs;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Vec<F>> left, right;
      for (std::size_t k = 0; k < s; ++k) {
        left.push_back(a.multiply(std::span<const T>(out.xs[i]), soc2.basis().row(k)));
        right.push_back(a.multiply(soc2.basis().row(k), std::span<const T>(out.xs[i])));
      }
      for (int side = 0; side < 2; ++side)
        for (std::size_t c = 0; c < n; ++c) {
          Vec<F> row(s);
          for (std::size_t k = 0; k < s; ++k) row[k] = side == 0 ? left[k][c] : right[k][c];
          m.append_row(row);
          rhs.push_back(i == j ? out.z[c] : f.zero());
        }
    }
    auto sol = solve(m, std::span<const T>(rhs));
    if (!sol) bad("no dual element in soc^2(A)");
    Vec<F> y(n, f.zero());
    for (std::size_t k = 0; k < s; ++k) axpy(f, (*sol)[k], soc2.basis().row(k), std::span<T>(y));
    out.ys.push_back(std::move(y));
  }
  return out;
}

/// The map x_i -> sum_j sigma_ij y_j, zero on 1 + J^2. Returns the certified
/// derivation, or nothing when the Leibniz rule fails.
template <Field F>
std::optional<Derivation<F>> second_socle_map(const FDAlgebra<F>& a, const Matrix<F>& sigma,
                                              const SocleTwoPairing<F>& pairing) {
  using T = typename F::value_type;
  const F& f = a.field();
  const std::size_t r = pairing.xs.size();
  require(sigma.rows() == r && sigma.cols() == r, ErrorKind::DimensionMismatch, "sigma must be r x r");
  std::vector<Vec<F>> values(r, Vec<F>(a.dim(), f.zero()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) axpy(f, sigma(i, j), std::span<const T>(pairing.ys[j]), std::span<T>(values[i]));
  auto images = detail::map_on_complement(a, pairing.xs, values);
  if (!images) fail(ErrorKind::PairingNotFound, "pairing basis does not complement J(A)^2");
  try {
    return Derivation<F>(a, std::move(*images));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotADerivation) return std::nullopt;
    throw;
  }
}

template <Field F>
std::optional<Derivation<F>> second_socle_map(const FDAlgebra<F>& a, const Matrix<F>& sigma) {
  return second_socle_map(a, sigma, socle_two_pairing(a));
}

}  // namespace qci
