#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qci/derivation.hpp"
#include "qci/error.hpp"
#include "qci/linalg.hpp"
#include "qci/structure.hpp"

namespace qci {

template <Field F>
class LieStructure;

/// A class in HH^1(A) = Der(A)/IDer(A): canonical coordinates with respect
/// to the structure's basis, plus the representative it was built from.
template <Field F>
class HH1Element {
 public:
  using T = typename F::value_type;

  const Vec<F>& coords() const noexcept { return coords_; }
  const Derivation<F>& rep() const noexcept { return rep_; }
  bool is_zero() const { return is_zero_vec(rep_.field(), std::span<const T>(coords_)); }

  /// Equality of classes: same structure and same canonical coordinates.
  friend bool operator==(const HH1Element& u, const HH1Element& v) {
    return u.owner_ == v.owner_ && u.coords_ == v.coords_;
  }

 private:
  friend class LieStructure<F>;
  HH1Element(std::shared_ptr<const void> owner, Vec<F> coords, Derivation<F> rep)
      : owner_(std::move(owner)), coords_(std::move(coords)), rep_(std::move(rep)) {}

  std::shared_ptr<const void> owner_;
  Vec<F> coords_;
  Derivation<F> rep_;
};

/// HH^1(A) as a Lie algebra, Z(A)-module and (in characteristic p) restricted
/// Lie algebra. Elements are handled in coordinates with respect to the
/// images of a fixed list of derivations spanning a complement of IDer(A).
///
/// Derivations are compared through their values on the generators of A
/// (the "signature"), which determine them.
template <Field F>
class LieStructure {
 public:
  using T = typename F::value_type;

  /// `der_signatures`: Der(A) in signature coordinates. `basis`: derivations
  /// whose classes form a basis of HH^1(A).
  static LieStructure build(const FDAlgebra<F>& a, std::vector<Derivation<F>> basis, std::vector<std::string> names,
                            const Subspace<F>& der_signatures) {
    auto d = std::make_shared<Data>(Data{a, std::move(basis), std::move(names), inner_derivation_signatures(a),
                                         der_signatures, nullptr, {}, center(a), Subspace<F>::zero(a.field(), 0), {}});
    const F& f = a.field();
    const std::size_t dim = d->basis.size();
    if (d->names.empty())
      for (std::size_t i = 0; i < dim; ++i) d->names.push_back("D" + std::to_string(i));
    require(d->names.size() == dim, ErrorKind::DimensionMismatch, "one name per basis derivation");
    std::vector<Vec<F>> reduced;
    for (const auto& x : d->basis) {
      require(x.algebra() == a, ErrorKind::AlgebraMismatch, "basis derivation on another algebra");
      Vec<F> sig = x.signature();
      require(der_signatures.contains(std::span<const T>(sig)), ErrorKind::StructureMismatch,
              "basis element is not in Der(A)");
      reduced.push_back(d->ider.reduce(std::span<const T>(sig)));
    }
    require(der_signatures.dim() - d->ider.dim() == dim, ErrorKind::StructureMismatch,
            "basis size differs from dim Der - dim IDer");
    d->solver = std::make_shared<CoordinateSolver<F>>(f, d->ider.ambient_dim(), reduced);  // throws if dependent
    LieStructure l(d);

    d->table.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) d->table[i * dim + j] = l.bracket_coords(d->basis[i], d->basis[j]);

    d->center_radical = intersection(d->center, a.radical());
    for (std::size_t r = 0; r < d->center.dim(); ++r) d->z_action.push_back(l.action_matrix(d->center.basis().row(r)));
    return l;
  }

  const FDAlgebra<F>& algebra() const noexcept { return d_->algebra; }
  const F& field() const noexcept { return d_->algebra.field(); }
  std::size_t dim() const noexcept { return d_->basis.size(); }
  const std::vector<std::string>& names() const noexcept { return d_->names; }
  const Derivation<F>& basis_derivation(std::size_t i) const { return d_->basis.at(i); }
  const Subspace<F>& ider_signatures() const noexcept { return d_->ider; }
  const Subspace<F>& der_signatures() const noexcept { return d_->der; }
  const Subspace<F>& algebra_center() const noexcept { return d_->center; }
  const Subspace<F>& center_radical() const noexcept { return d_->center_radical; }

  /// Coordinates of [X_i, X_j].
  const Vec<F>& structure_constants(std::size_t i, std::size_t j) const { return d_->table.at(i * dim() + j); }

  /// Canonical coordinates of the class of a derivation.
  Vec<F> coordinates(const Derivation<F>& der) const { return signature_coordinates(der.signature()); }

  Vec<F> signature_coordinates(std::span<const T> sig) const {
    return d_->solver->coordinates(std::span<const T>(d_->ider.reduce(sig)));
  }

  bool is_inner(const Derivation<F>& der) const {
    return d_->ider.contains(std::span<const T>(der.signature()));
  }

  HH1Element<F> element(std::size_t i) const {
    return HH1Element<F>(d_, unit_vec(field(), dim(), i), d_->basis.at(i));
  }

  HH1Element<F> from_derivation(Derivation<F> der) const {
    require(der.algebra() == algebra(), ErrorKind::StructureMismatch, "derivation on another algebra");
    Vec<F> c = coordinates(der);
    return HH1Element<F>(d_, std::move(c), std::move(der));
  }

  /// The class with the given coordinates, represented by sum c_i X_i.
  HH1Element<F> from_coords(Vec<F> c) const {
    require(c.size() == dim(), ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
    return HH1Element<F>(d_, c, combination(c));
  }

  Derivation<F> combination(std::span<const T> c) const {
    Derivation<F> out = Derivation<F>::zero(algebra());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!field().is_zero(c[i])) out = out + c[i] * d_->basis[i];
    return out;
  }

  /// [u, v] computed from the representatives, then canonicalised.
  HH1Element<F> bracket(const HH1Element<F>& u, const HH1Element<F>& v) const {
    mine(u);
    mine(v);
    return from_coords(bracket_coords(u.rep(), v.rep()));
  }

  /// z . u for central z, computed on the representative.
  HH1Element<F> z_action(std::span<const T> z, const HH1Element<F>& u) const {
    mine(u);
    require(z.size() == algebra().dim(), ErrorKind::DimensionMismatch, "element has wrong length");
    require(is_central(algebra(), z), ErrorKind::NotCentral, "acting element is not central");
    Vec<F> sig;
    for (auto g : algebra().generating_set()) {
      Vec<F> v = algebra().multiply(z, std::span<const T>(u.rep().image(g)));
      sig.insert(sig.end(), v.begin(), v.end());
    }
    return from_coords(signature_coordinates(std::span<const T>(sig)));
  }

  /// u^[p]: the class of the p-fold composite of the representative.
  HH1Element<F> p_power(const HH1Element<F>& u) const {
    mine(u);
    const std::uint64_t p = field().characteristic();
    require(p > 0, ErrorKind::PreconditionFailed, "p-power map needs positive characteristic");
    Vec<F> sig;
    for (auto g : algebra().generating_set()) {
      Vec<F> v = u.rep().image(g);
      for (std::uint64_t s = 1; s < p; ++s) v = u.rep()(std::span<const T>(v));
      sig.insert(sig.end(), v.begin(), v.end());
    }
    return from_coords(signature_coordinates(std::span<const T>(sig)));
  }

  // ---- Lie-theoretic subspaces of the coordinate space k^dim ----------------

  Subspace<F> whole() const { return Subspace<F>::whole(field(), dim()); }
  Subspace<F> zero() const { return Subspace<F>::zero(field(), dim()); }
  Subspace<F> span_of(const std::vector<std::size_t>& idx) const {
    std::vector<Vec<F>> g;
    for (auto i : idx) g.push_back(unit_vec(field(), dim(), i));
    return Subspace<F>::span(field(), dim(), g);
  }

  /// Bracket of coordinate vectors through the structure constants.
  Vec<F> bracket_vec(std::span<const T> u, std::span<const T> v) const {
    const F& f = field();
    Vec<F> out(dim(), f.zero());
    std::vector<std::size_t> vs;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!f.is_zero(v[j])) vs.push_back(j);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (f.is_zero(u[i])) continue;
      for (auto j : vs) axpy(f, f.mul(u[i], v[j]), std::span<const T>(d_->table[i * dim() + j]), std::span<T>(out));
    }
    return out;
  }

  /// ad(u) as a matrix: column j = [u, X_j].
  Matrix<F> ad(std::span<const T> u) const {
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<F> col = bracket_vec(u, std::span<const T>(unit_vec(field(), dim(), j)));
      for (std::size_t r = 0; r < dim(); ++r) m(r, j) = col[r];
    }
    return m;
  }

  Subspace<F> bracket_space(const Subspace<F>& u, const Subspace<F>& v) const {
    EchelonBuilder<F> b(field(), dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j) {
        b.add(bracket_vec(u.basis().row(i), v.basis().row(j)));
        if (b.full()) return b.subspace();
      }
    return b.subspace();
  }

  Subspace<F> derived_algebra() const { return bracket_space(whole(), whole()); }

  /// {v : [s, v] = 0 for all s in S}.
  Subspace<F> centralizer(const Subspace<F>& s) const {
    EchelonBuilder<F> eq(field(), dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Matrix<F> m = ad(s.basis().row(i));
      for (std::size_t r = 0; r < dim(); ++r) eq.add(m.row(r));
    }
    return eq.kernel();
  }

  Subspace<F> lie_center() const { return centralizer(whole()); }

  /// Centre of a subalgebra U: elements of U commuting with all of U.
  Subspace<F> center_of(const Subspace<F>& u) const { return intersection(u, centralizer(u)); }

  /// U, [U,U], [U,[U,U]], ... until it stabilises.
  std::vector<Subspace<F>> lower_central_series(const Subspace<F>& u) const {
    std::vector<Subspace<F>> out{u};
    while (true) {
      Subspace<F> next = bracket_space(u, out.back());
      if (next == out.back()) break;
      out.push_back(std::move(next));
    }
    return out;
  }

  /// U, [U,U], [[U,U],[U,U]], ... until it stabilises.
  std::vector<Subspace<F>> derived_series(const Subspace<F>& u) const {
    std::vector<Subspace<F>> out{u};
    while (true) {
      Subspace<F> next = bracket_space(out.back(), out.back());
      if (next == out.back()) break;
      out.push_back(std::move(next));
    }
    return out;
  }

  bool is_nilpotent(const Subspace<F>& u) const { return lower_central_series(u).back().is_zero(); }
  bool is_solvable(const Subspace<F>& u) const { return derived_series(u).back().is_zero(); }
  bool is_abelian(const Subspace<F>& u) const { return bracket_space(u, u).is_zero(); }

  /// Matrix of z . (-) on HH^1 for central z.
  Matrix<F> action_matrix(std::span<const T> z) const {
    require(is_central(algebra(), z), ErrorKind::NotCentral, "acting element is not central");
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<F> sig;
      for (auto g : algebra().generating_set()) {
        Vec<F> v = algebra().multiply(z, std::span<const T>(d_->basis[j].image(g)));
        sig.insert(sig.end(), v.begin(), v.end());
      }
      Vec<F> c = signature_coordinates(std::span<const T>(sig));
      for (std::size_t r = 0; r < dim(); ++r) m(r, j) = c[r];
    }
    return m;
  }

  /// J(Z(A)) . HH^1.
  Subspace<F> radical_times_module() const {
    EchelonBuilder<F> b(field(), dim());
    for (std::size_t r = 0; r < d_->center_radical.dim(); ++r) {
      Matrix<F> m = action_matrix(d_->center_radical.basis().row(r));
      for (std::size_t j = 0; j < dim(); ++j) b.add(m.col_vec(j));
    }
    return b.subspace();
  }

  /// soc_{Z(A)}(HH^1): classes annihilated by J(Z(A)).
  Subspace<F> socle_as_Z_module() const {
    EchelonBuilder<F> eq(field(), dim());
    for (std::size_t r = 0; r < d_->center_radical.dim(); ++r) {
      Matrix<F> m = action_matrix(d_->center_radical.basis().row(r));
      for (std::size_t i = 0; i < dim(); ++i) eq.add(m.row(i));
    }
    return eq.kernel();
  }

 private:
  struct Data {
    FDAlgebra<F> algebra;
    std::vector<Derivation<F>> basis;
    std::vector<std::string> names;
    Subspace<F> ider;
    Subspace<F> der;
    std::shared_ptr<CoordinateSolver<F>> solver;
    std::vector<Vec<F>> table;
    Subspace<F> center;
    Subspace<F> center_radical;
    std::vector<Matrix<F>> z_action;
  };

  explicit LieStructure(std::shared_ptr<Data> d) : d_(std::move(d)) {}

  void mine(const HH1Element<F>& u) const {
    require(u.owner_.get() == static_cast<const void*>(d_.get()), ErrorKind::StructureMismatch,
            "element belongs to another Lie structure");
  }

  /// Coordinates of [D1, D2], evaluated on generators only.
  Vec<F> bracket_coords(const Derivation<F>& x, const Derivation<F>& y) const {
    Vec<F> sig;
    for (auto g : algebra().generating_set()) {
      Vec<F> v = sub_vec(field(), std::span<const T>(x(std::span<const T>(y.image(g)))),
                         std::span<const T>(y(std::span<const T>(x.image(g)))));
      sig.insert(sig.end(), v.begin(), v.end());
    }
    return signature_coordinates(std::span<const T>(sig));
  }

  std::shared_ptr<Data> d_;
};

/// Basis of HH^1(A) from the generic Leibniz solve: greedily keeps the
/// canonical Der(A) basis vectors that are independent modulo IDer(A).
template <Field F>
LieStructure<F> hh1_generic(const FDAlgebra<F>& a) {
  using T = typename F::value_type;
  Subspace<F> der = derivations_generic(a);
  EchelonBuilder<F> sigs(a.field(), a.dim() * a.generating_set().size());
  EchelonBuilder<F> acc(a.field(), sigs.cols());
  Subspace<F> ider = inner_derivation_signatures(a);
  for (std::size_t r = 0; r < ider.dim(); ++r) acc.add(ider.basis().row(r));
  std::vector<Derivation<F>> basis;
  for (std::size_t r = 0; r < der.dim(); ++r) {
    Derivation<F> d = Derivation<F>::from_flat(a, der.basis().row(r));
    Vec<F> s = d.signature();
    sigs.add(s);
    if (acc.add(std::span<const T>(s))) basis.push_back(std::move(d));
  }
  return LieStructure<F>::build(a, std::move(basis), {}, sigs.subspace());
}

}  // namespace qci
