#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qci/algebra.hpp"
#include "qci/error.hpp"
#include "qci/linalg.hpp"
#include "qci/structure.hpp"

namespace qci {

/// Largest dimension for which the raw n^3-row Leibniz system is solved.
inline constexpr std::size_t kGenericScaleLimit = 50;

namespace detail {

/// Does the map with images[l] = D(b_l) satisfy D(b_i b_j) = D(b_i) b_j + b_i D(b_j)?
template <Field F>
bool leibniz_pair(const FDAlgebra<F>& a, const std::vector<Vec<F>>& images, std::size_t i, std::size_t j) {
  using T = typename F::value_type;
  const F& f = a.field();
  Vec<F> lhs(a.dim(), f.zero());
  for (const auto& [k, t] : a.product(i, j)) axpy(f, t, std::span<const T>(images[k]), std::span<T>(lhs));
  Vec<F> rhs = a.right_basis(images[i], j);
  Vec<F> l2 = a.left_basis(i, images[j]);
  for (std::size_t k = 0; k < a.dim(); ++k) rhs[k] = f.add(rhs[k], l2[k]);
  return lhs == rhs;
}

}  // namespace detail

/// A linear endomorphism of A certified to satisfy the Leibniz rule.
///
/// Certification: D(1) = 0 and D(g b) = D(g) b + g D(b) for every declared
/// generator g and every basis element b. The set of a with D(ab) = D(a)b +
/// aD(b) for all b is a subalgebra, so this settles all pairs. On top of
/// that every basis pair is checked for n <= 50 and 1000 random pairs beyond.
template <Field F>
class Derivation {
 public:
  using T = typename F::value_type;

  /// images[l] = D(b_l). Throws NotADerivation when the Leibniz rule fails.
  Derivation(FDAlgebra<F> a, std::vector<Vec<F>> images) : a_(std::move(a)), images_(std::move(images)) {
    require(images_.size() == a_.dim(), ErrorKind::DimensionMismatch, "need one image per basis element");
    for (const auto& v : images_)
      require(v.size() == a_.dim(), ErrorKind::DimensionMismatch, "image has wrong length");
    certify();
  }

  /// From an n x n matrix whose column l holds D(b_l).
  static Derivation from_matrix(const FDAlgebra<F>& a, const Matrix<F>& m) {
    require(m.rows() == a.dim() && m.cols() == a.dim(), ErrorKind::DimensionMismatch, "matrix is not n x n");
    std::vector<Vec<F>> images;
    for (std::size_t l = 0; l < a.dim(); ++l) images.push_back(m.col_vec(l));
    return Derivation(a, std::move(images));
  }

  /// From n^2 coordinates laid out as index l*n + k = coefficient of b_k in D(b_l).
  static Derivation from_flat(const FDAlgebra<F>& a, std::span<const T> flat) {
    const std::size_t n = a.dim();
    require(flat.size() == n * n, ErrorKind::DimensionMismatch, "flattened derivation has wrong length");
    std::vector<Vec<F>> images(n);
    for (std::size_t l = 0; l < n; ++l) images[l].assign(flat.begin() + l * n, flat.begin() + (l + 1) * n);
    return Derivation(a, std::move(images));
  }

  static Derivation zero(const FDAlgebra<F>& a) {
    return Derivation(a, std::vector<Vec<F>>(a.dim(), Vec<F>(a.dim(), a.field().zero())), trusted{});
  }

  const FDAlgebra<F>& algebra() const noexcept { return a_; }
  const F& field() const noexcept { return a_.field(); }
  std::size_t dim() const noexcept { return a_.dim(); }

  /// D(b_l)
  const Vec<F>& image(std::size_t l) const { return images_.at(l); }

  Vec<F> operator()(std::span<const T> v) const {
    require(v.size() == dim(), ErrorKind::DimensionMismatch, "argument has wrong length");
    const F& f = field();
    Vec<F> out(dim(), f.zero());
    for (std::size_t l = 0; l < dim(); ++l)
      if (!f.is_zero(v[l])) axpy(f, v[l], std::span<const T>(images_[l]), std::span<T>(out));
    return out;
  }

  Matrix<F> matrix() const {
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t l = 0; l < dim(); ++l)
      for (std::size_t k = 0; k < dim(); ++k) m(k, l) = images_[l][k];
    return m;
  }

  Vec<F> flatten() const {
    Vec<F> out;
    out.reserve(dim() * dim());
    for (const auto& v : images_) out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  /// Values on the generating set, concatenated. Injective on Der(A).
  Vec<F> signature() const {
    Vec<F> out;
    for (auto g : a_.generating_set()) out.insert(out.end(), images_[g].begin(), images_[g].end());
    return out;
  }

  bool is_zero() const {
    for (const auto& v : images_)
      if (!is_zero_vec(field(), std::span<const T>(v))) return false;
    return true;
  }

  friend bool operator==(const Derivation& x, const Derivation& y) {
    return x.a_ == y.a_ && x.images_ == y.images_;
  }

  friend Derivation operator+(const Derivation& x, const Derivation& y) {
    same(x, y);
    std::vector<Vec<F>> im(x.dim());
    for (std::size_t l = 0; l < x.dim(); ++l) im[l] = add_vec(x.field(), std::span<const T>(x.images_[l]), std::span<const T>(y.images_[l]));
    return Derivation(x.a_, std::move(im), trusted{});
  }
  friend Derivation operator-(const Derivation& x, const Derivation& y) {
    same(x, y);
    std::vector<Vec<F>> im(x.dim());
    for (std::size_t l = 0; l < x.dim(); ++l) im[l] = sub_vec(x.field(), std::span<const T>(x.images_[l]), std::span<const T>(y.images_[l]));
    return Derivation(x.a_, std::move(im), trusted{});
  }
  friend Derivation operator*(const T& c, const Derivation& x) {
    std::vector<Vec<F>> im(x.dim());
    for (std::size_t l = 0; l < x.dim(); ++l) im[l] = scale_vec(x.field(), c, std::span<const T>(x.images_[l]));
    return Derivation(x.a_, std::move(im), trusted{});
  }

  /// [D1, D2] = D1 D2 - D2 D1, certified.
  friend Derivation commutator(const Derivation& x, const Derivation& y) {
    same(x, y);
    std::vector<Vec<F>> im(x.dim());
    for (std::size_t l = 0; l < x.dim(); ++l)
      im[l] = sub_vec(x.field(), std::span<const T>(x(y.images_[l])), std::span<const T>(y(x.images_[l])));
    return Derivation(x.a_, std::move(im));
  }

  /// z D for central z, certified.
  Derivation left_multiple(std::span<const T> z) const {
    require(is_central(a_, z), ErrorKind::NotCentral, "multiplier is not central");
    std::vector<Vec<F>> im(dim());
    for (std::size_t l = 0; l < dim(); ++l) im[l] = a_.multiply(z, images_[l]);
    return Derivation(a_, std::move(im));
  }

  /// The k-fold composite as a matrix (not a derivation in general).
  Matrix<F> power_matrix(std::size_t k) const {
    Matrix<F> m = Matrix<F>::identity(field(), dim());
    for (std::size_t l = 0; l < dim(); ++l) {
      Vec<F> v = a_.basis_vector(l);
      for (std::size_t s = 0; s < k; ++s) v = (*this)(v);
      for (std::size_t r = 0; r < dim(); ++r) m(r, l) = v[r];
    }
    return m;
  }

  /// D^p in characteristic p > 0, certified.
  Derivation restricted_power() const {
    const std::uint64_t p = field().characteristic();
    require(p > 0, ErrorKind::PreconditionFailed, "the p-power map needs positive characteristic");
    std::vector<Vec<F>> im(dim());
    for (std::size_t l = 0; l < dim(); ++l) {
      Vec<F> v = images_[l];
      for (std::uint64_t s = 1; s < p; ++s) v = (*this)(v);
      im[l] = std::move(v);
    }
    return Derivation(a_, std::move(im));
  }

  static void same(const Derivation& x, const Derivation& y) {
    require(x.a_ == y.a_, ErrorKind::AlgebraMismatch, "derivations on different algebras");
  }

 private:
  struct trusted {};
  // Linear combinations of derivations are derivations.
  Derivation(FDAlgebra<F> a, std::vector<Vec<F>> images, trusted) : a_(std::move(a)), images_(std::move(images)) {}

  void certify() const {
    const std::size_t n = dim();
    auto bad = [](const std::string& why) { fail(ErrorKind::NotADerivation, why); };
    std::span<const T> one(a_.unit());
    if (!is_zero_vec(field(), std::span<const T>((*this)(one)))) bad("D(1) != 0");
    for (auto g : a_.generating_set())
      for (std::size_t l = 0; l < n; ++l)
        if (!detail::leibniz_pair(a_, images_, g, l)) bad("Leibniz rule fails on a generator pair");
    if (n <= kGenericScaleLimit) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!detail::leibniz_pair(a_, images_, i, j)) bad("Leibniz rule fails");
    } else {
      std::mt19937_64 rng(0xd0e5ULL + n);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int s = 0; s < 1000; ++s)
        if (!detail::leibniz_pair(a_, images_, pick(rng), pick(rng))) bad("Leibniz rule fails on a sampled pair");
    }
  }

  FDAlgebra<F> a_;
  std::vector<Vec<F>> images_;
};

/// Der(A) as a subspace of n^2-space (coordinate l*n + k = coefficient of
/// b_k in D(b_l)), from the full Leibniz system over all basis pairs.
template <Field F>
Subspace<F> derivations_generic(const FDAlgebra<F>& a) {
  const std::size_t n = a.dim();
  require(n <= kGenericScaleLimit, ErrorKind::ScaleLimitExceeded,
          "generic Leibniz solve limited to dimension " + std::to_string(kGenericScaleLimit));
  const F& f = a.field();
  EchelonBuilder<F> eq(f, n * n);
  auto u = [n](std::size_t l, std::size_t k) { return static_cast<std::uint32_t>(l * n + k); };
  std::vector<SparseVec<F>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (auto& r : rows) r.clear();
      // D(b_i b_j) = sum_m t^{ij}_m D(b_m)
      for (const auto& [m, t] : a.product(i, j))
        for (std::size_t k = 0; k < n; ++k) rows[k].emplace_back(u(m, k), t);
      // - D(b_i) b_j = - sum_m D_{i,m} (b_m b_j)
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& [k, t] : a.product(m, j)) rows[k].emplace_back(u(i, m), f.neg(t));
      // - b_i D(b_j)
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& [k, t] : a.product(i, m)) rows[k].emplace_back(u(j, m), f.neg(t));
      for (const auto& r : rows)
        if (!r.empty()) eq.add_sparse(r);
    }
  return eq.kernel();
}

/// ad(w) = [w, -].
template <Field F>
Derivation<F> inner_derivation(const FDAlgebra<F>& a, std::span<const typename F::value_type> w) {
  require(w.size() == a.dim(), ErrorKind::DimensionMismatch, "element has wrong length");
  std::vector<Vec<F>> im(a.dim());
  for (std::size_t l = 0; l < a.dim(); ++l) {
    Vec<F> e = a.basis_vector(l);
    im[l] = a.commutator(w, e);
  }
  return Derivation<F>(a, std::move(im));
}

template <Field F>
Derivation<F> inner_derivation(const AlgebraElement<F>& w) {
  return inner_derivation(w.algebra(), std::span<const typename F::value_type>(w.coords()));
}

namespace detail {

/// Flattened ad(b_i) without certification (used in bulk spans).
template <Field F>
Vec<F> flat_inner_basis(const FDAlgebra<F>& a, std::size_t i) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  Vec<F> out(n * n, f.zero());
  for (std::size_t l = 0; l < n; ++l) {
    for (const auto& [k, t] : a.product(i, l)) out[l * n + k] = f.add(out[l * n + k], t);
    for (const auto& [k, t] : a.product(l, i)) out[l * n + k] = f.sub(out[l * n + k], t);
  }
  return out;
}

/// Signature (values on the generating set) of ad(b_i).
template <Field F>
Vec<F> inner_signature(const FDAlgebra<F>& a, std::size_t i) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  auto gens = a.generating_set();
  Vec<F> out(gens.size() * n, f.zero());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (const auto& [k, t] : a.product(i, gens[s])) out[s * n + k] = f.add(out[s * n + k], t);
    for (const auto& [k, t] : a.product(gens[s], i)) out[s * n + k] = f.sub(out[s * n + k], t);
  }
  return out;
}

}  // namespace detail

/// IDer(A) in the flattened n^2 coordinates.
template <Field F>
Subspace<F> inner_derivations(const FDAlgebra<F>& a) {
  EchelonBuilder<F> b(a.field(), a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) b.add(detail::flat_inner_basis(a, i));
  return b.subspace();
}

/// IDer(A) in signature coordinates.
template <Field F>
Subspace<F> inner_derivation_signatures(const FDAlgebra<F>& a) {
  EchelonBuilder<F> b(a.field(), a.dim() * a.generating_set().size());
  for (std::size_t i = 0; i < a.dim(); ++i) b.add(detail::inner_signature(a, i));
  return b.subspace();
}

/// Every derivation in the family maps J(A) into J(A)?
template <Field F>
bool preserves_radical(const Derivation<F>& d) {
  const auto& rad = d.algebra().radical();
  for (std::size_t r = 0; r < rad.dim(); ++r)
    if (!rad.contains(d(rad.basis().row(r)))) return false;
  return true;
}

}  // namespace qci
