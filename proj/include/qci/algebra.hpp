#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qci/error.hpp"
#include "qci/field.hpp"
#include "qci/linalg.hpp"

namespace qci {

/// Raw description of a finite-dimensional unital associative algebra.
/// Everything here is checked by FDAlgebra::create.
template <Field F>
struct AlgebraSpec {
  F field;
  std::string name;
  std::vector<std::string> labels;
  /// table[i * n + j] = coordinates of b_i * b_j
  std::vector<SparseVec<F>> table;
  Vec<F> unit;
  std::optional<Vec<F>> form;
  std::vector<Vec<F>> radical_basis;
  std::size_t simple_count = 1;
  /// Basis indices generating A as a unital algebra; empty means "all of them".
  std::vector<std::size_t> generators;
};

template <Field F>
class FDAlgebra;

namespace detail {

template <Field F>
struct AlgebraData {
  F field;
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec<F>> table;
  Vec<F> unit;
  std::optional<Vec<F>> form;
  Subspace<F> radical;
  std::size_t simple_count = 1;
  std::vector<std::size_t> generators;
};

template <Field F>
SparseVec<F> normalise(const F& f, SparseVec<F> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  for (auto& [c, x] : v) {
    if (!out.empty() && out.back().first == c)
      out.back().second = f.add(out.back().second, x);
    else
      out.emplace_back(c, x);
  }
  std::erase_if(out, [&](const auto& e) { return f.is_zero(e.second); });
  return out;
}

template <Field F>
Vec<F> table_product(const F& f, std::size_t n, const std::vector<SparseVec<F>>& table,
                     std::span<const typename F::value_type> u, std::span<const typename F::value_type> v) {
  Vec<F> out(n, f.zero());
  std::vector<std::size_t> nu, nv;
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.is_zero(u[i])) nu.push_back(i);
    if (!f.is_zero(v[i])) nv.push_back(i);
  }
  for (auto i : nu)
    for (auto j : nv) {
      auto c = f.mul(u[i], v[j]);
      for (const auto& [k, t] : table[i * n + j]) out[k] = f.add(out[k], f.mul(c, t));
    }
  return out;
}

}  // namespace detail

/// Immutable handle to a verified algebra. Copies share the same instance;
/// two handles compare equal only when they refer to the same instance.
template <Field F>
class FDAlgebra {
 public:
  using T = typename F::value_type;

  /// Validates associativity, the unit, the symmetrising form (if any), the
  /// supplied radical (two-sided nilpotent ideal with semisimple quotient)
  /// and that the generators generate. Throws InvalidAlgebra on failure.
  static FDAlgebra create(AlgebraSpec<F> spec);

  const F& field() const noexcept { return d_->field; }
  const std::string& name() const noexcept { return d_->name; }
  std::size_t dim() const noexcept { return d_->dim; }
  const std::string& label(std::size_t i) const { return d_->labels.at(i); }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const SparseVec<F>& product(std::size_t i, std::size_t j) const { return d_->table[i * d_->dim + j]; }
  const Vec<F>& unit() const noexcept { return d_->unit; }
  bool has_form() const noexcept { return d_->form.has_value(); }
  const Vec<F>& form() const {
    require(has_form(), ErrorKind::NotSymmetric, "algebra carries no symmetrising form");
    return *d_->form;
  }
  const Subspace<F>& radical() const noexcept { return d_->radical; }
  std::size_t simple_count() const noexcept { return d_->simple_count; }
  const std::vector<std::size_t>& generators() const noexcept { return d_->generators; }

  /// Bilinear product of coordinate vectors.
  Vec<F> multiply(std::span<const T> u, std::span<const T> v) const {
    require(u.size() == dim() && v.size() == dim(), ErrorKind::DimensionMismatch, "coordinate length mismatch");
    return detail::table_product(field(), dim(), d_->table, u, v);
  }

  /// b_i * v
  Vec<F> left_basis(std::size_t i, std::span<const T> v) const {
    const F& f = field();
    Vec<F> out(dim(), f.zero());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (f.is_zero(v[j])) continue;
      for (const auto& [k, t] : product(i, j)) out[k] = f.add(out[k], f.mul(v[j], t));
    }
    return out;
  }

  /// v * b_j
  Vec<F> right_basis(std::span<const T> v, std::size_t j) const {
    const F& f = field();
    Vec<F> out(dim(), f.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (f.is_zero(v[i])) continue;
      for (const auto& [k, t] : product(i, j)) out[k] = f.add(out[k], f.mul(v[i], t));
    }
    return out;
  }

  Vec<F> commutator(std::span<const T> u, std::span<const T> v) const {
    return sub_vec(field(), std::span<const T>(multiply(u, v)), std::span<const T>(multiply(v, u)));
  }

  /// s(u), the symmetrising form evaluated on a coordinate vector.
  T trace(std::span<const T> u) const {
    const Vec<F>& s = form();
    const F& f = field();
    T acc = f.zero();
    for (std::size_t i = 0; i < dim(); ++i)
      if (!f.is_zero(u[i]) && !f.is_zero(s[i])) acc = f.add(acc, f.mul(u[i], s[i]));
    return acc;
  }

  /// Gram matrix (b_i, b_j) -> s(b_i b_j).
  Matrix<F> gram() const {
    const F& f = field();
    Matrix<F> g(f, dim(), dim());
    const Vec<F>& s = form();
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        T acc = f.zero();
        for (const auto& [k, t] : product(i, j)) acc = f.add(acc, f.mul(t, s[k]));
        g(i, j) = acc;
      }
    return g;
  }

  Vec<F> basis_vector(std::size_t i) const { return unit_vec(field(), dim(), i); }

  /// Generators used for commutant-style solves (all basis elements when
  /// none were declared).
  std::vector<std::size_t> generating_set() const {
    if (!generators().empty()) return generators();
    std::vector<std::size_t> all(dim());
    for (std::size_t i = 0; i < dim(); ++i) all[i] = i;
    return all;
  }

  friend bool operator==(const FDAlgebra& a, const FDAlgebra& b) { return a.d_ == b.d_; }

 private:
  explicit FDAlgebra(std::shared_ptr<const detail::AlgebraData<F>> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::AlgebraData<F>> d_;
};

/// An element tied to one algebra instance.
template <Field F>
class AlgebraElement {
 public:
  using T = typename F::value_type;

  AlgebraElement(FDAlgebra<F> algebra, Vec<F> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    require(coords_.size() == algebra_.dim(), ErrorKind::DimensionMismatch, "element has wrong coordinate length");
  }

  static AlgebraElement basis(const FDAlgebra<F>& a, std::size_t i) { return {a, a.basis_vector(i)}; }
  static AlgebraElement one(const FDAlgebra<F>& a) { return {a, a.unit()}; }
  static AlgebraElement zero(const FDAlgebra<F>& a) { return {a, Vec<F>(a.dim(), a.field().zero())}; }

  const FDAlgebra<F>& algebra() const noexcept { return algebra_; }
  const Vec<F>& coords() const noexcept { return coords_; }
  bool is_zero() const { return is_zero_vec(algebra_.field(), std::span<const T>(coords_)); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    same_algebra(a, b);
    return {a.algebra_, add_vec(a.algebra_.field(), std::span<const T>(a.coords_), std::span<const T>(b.coords_))};
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    same_algebra(a, b);
    return {a.algebra_, sub_vec(a.algebra_.field(), std::span<const T>(a.coords_), std::span<const T>(b.coords_))};
  }
  friend AlgebraElement operator*(const T& c, const AlgebraElement& a) {
    return {a.algebra_, scale_vec(a.algebra_.field(), c, std::span<const T>(a.coords_))};
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }

  static void same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    require(a.algebra_ == b.algebra_, ErrorKind::AlgebraMismatch, "elements belong to different algebras");
  }

 private:
  FDAlgebra<F> algebra_;
  Vec<F> coords_;
};

template <Field F>
AlgebraElement<F> multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  AlgebraElement<F>::same_algebra(a, b);
  return {a.algebra(), a.algebra().multiply(a.coords(), b.coords())};
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

template <Field F>
bool associative_triple(const F& f, std::size_t n, const std::vector<SparseVec<F>>& table, std::size_t i,
                        std::size_t j, std::size_t k) {
  // (b_i b_j) b_k vs b_i (b_j b_k)
  Vec<F> lhs(n, f.zero()), rhs(n, f.zero());
  for (const auto& [m, t] : table[i * n + j])
    for (const auto& [r, s] : table[m * n + k]) lhs[r] = f.add(lhs[r], f.mul(t, s));
  for (const auto& [m, t] : table[j * n + k])
    for (const auto& [r, s] : table[i * n + m]) rhs[r] = f.add(rhs[r], f.mul(t, s));
  return lhs == rhs;
}

/// Is the centre of the (radical-free) algebra given by `table` reduced?
/// Over F_p the Frobenius z -> z^p is additive on a commutative algebra, so
/// the nilpotent part of the centre is the kernel of a power of it.
inline bool centre_is_reduced(const PrimeField& f, std::size_t n, const std::vector<SparseVec<PrimeField>>& table) {
  using T = PrimeField::value_type;
  EchelonBuilder<PrimeField> eq(f, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec<PrimeField> row;
      for (std::size_t l = 0; l < n; ++l) {
        for (const auto& [c, t] : table[l * n + g])
          if (c == k) row.emplace_back(static_cast<std::uint32_t>(l), t);
        for (const auto& [c, t] : table[g * n + l])
          if (c == k) row.emplace_back(static_cast<std::uint32_t>(l), f.neg(t));
      }
      eq.add_sparse(row);
    }
  Subspace<PrimeField> z = eq.kernel();
  std::uint64_t power = f.modulus();
  std::size_t rounds = 1;
  while (power < n + 1) {
    power *= f.modulus();
    ++rounds;
  }
  std::vector<Vec<PrimeField>> images;
  for (std::size_t r = 0; r < z.dim(); ++r) {
    Vec<PrimeField> v = z.basis_vector(r);
    for (std::size_t round = 0; round < rounds; ++round) {
      Vec<PrimeField> acc = v;
      for (std::uint32_t e = 1; e < f.modulus(); ++e)
        acc = table_product(f, n, table, std::span<const T>(acc), std::span<const T>(v));
      v = acc;
    }
    images.push_back(std::move(v));
  }
  Subspace<PrimeField> im = Subspace<PrimeField>::span(f, n, images);
  return im.dim() == z.dim();
}

template <Field F>
bool centre_is_reduced(const F&, std::size_t, const std::vector<SparseVec<F>>&) {
  // Characteristic zero: the only radical-free algebras built here are
  // split semisimple by construction.
  return true;
}

}  // namespace detail

template <Field F>
FDAlgebra<F> FDAlgebra<F>::create(AlgebraSpec<F> spec) {
  using T = typename F::value_type;
  const F& f = spec.field;
  const std::size_t n = spec.unit.size();
  auto bad = [&](const std::string& why) { fail(ErrorKind::InvalidAlgebra, spec.name + ": " + why); };

  if (spec.table.size() != n * n) bad("structure table has wrong size");
  if (spec.labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) spec.labels.push_back("b" + std::to_string(i));
  }
  if (spec.labels.size() != n) bad("label count differs from dimension");
  for (auto& entry : spec.table) {
    for (const auto& [k, t] : entry)
      if (k >= n) bad("structure constant index out of range");
    entry = detail::normalise(f, std::move(entry));
  }

  // Associativity: exhaustive up to dimension 50, otherwise sampled.
  if (n <= 50) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!detail::associative_triple(f, n, spec.table, i, j, k)) bad("not associative");
  } else {
    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < 2000; ++s)
      if (!detail::associative_triple(f, n, spec.table, pick(rng), pick(rng), pick(rng))) bad("not associative");
  }

  // Two-sided unit.
  for (std::size_t i = 0; i < n; ++i) {
    Vec<F> e = unit_vec(f, n, i);
    Vec<F> l = detail::table_product(f, n, spec.table, std::span<const T>(spec.unit), std::span<const T>(e));
    Vec<F> r = detail::table_product(f, n, spec.table, std::span<const T>(e), std::span<const T>(spec.unit));
    if (l != e || r != e) bad("unit is not a two-sided identity");
  }

  // Symmetrising form: s(ab) = s(ba) and nondegenerate Gram matrix.
  if (spec.form) {
    const Vec<F>& s = *spec.form;
    if (s.size() != n) bad("form has wrong length");
    Matrix<F> g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T acc = f.zero();
        for (const auto& [k, t] : spec.table[i * n + j]) acc = f.add(acc, f.mul(t, s[k]));
        g(i, j) = acc;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (g(i, j) != g(j, i)) bad("form is not symmetric: s(ab) != s(ba)");
    if (rank(g) != n) bad("form is degenerate");
  }

  // Generators.
  std::vector<std::size_t> gens = spec.generators;
  if (gens.empty())
    for (std::size_t i = 0; i < n; ++i) gens.push_back(i);
  for (auto g : gens)
    if (g >= n) bad("generator index out of range");
  {
    EchelonBuilder<F> closure(f, n);
    std::vector<Vec<F>> frontier{spec.unit};
    closure.add(spec.unit);
    while (!frontier.empty()) {
      std::vector<Vec<F>> next;
      for (const auto& w : frontier)
        for (auto g : gens) {
          Vec<F> e = unit_vec(f, n, g);
          Vec<F> wg = detail::table_product(f, n, spec.table, std::span<const T>(w), std::span<const T>(e));
          if (closure.add(wg)) next.push_back(std::move(wg));
        }
      frontier = std::move(next);
    }
    if (closure.rank() != n) bad("declared generators do not generate the algebra");
  }

  // Radical: two-sided ideal, nilpotent, semisimple quotient.
  Subspace<F> rad = Subspace<F>::span(f, n, spec.radical_basis);
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    Vec<F> v = rad.basis_vector(r);
    for (auto g : gens) {
      Vec<F> e = unit_vec(f, n, g);
      if (!rad.contains(detail::table_product(f, n, spec.table, std::span<const T>(e), std::span<const T>(v))) ||
          !rad.contains(detail::table_product(f, n, spec.table, std::span<const T>(v), std::span<const T>(e))))
        bad("radical is not a two-sided ideal");
    }
  }
  {
    Subspace<F> power = rad;
    std::size_t steps = 1;
    while (power.dim() > 0) {
      if (steps > n) bad("radical is not nilpotent");
      std::vector<Vec<F>> prods;
      for (std::size_t a = 0; a < power.dim(); ++a)
        for (std::size_t b = 0; b < rad.dim(); ++b)
          prods.push_back(detail::table_product(f, n, spec.table, power.basis().row(a), rad.basis().row(b)));
      power = Subspace<F>::span(f, n, prods);
      ++steps;
    }
  }
  {
    // Structure constants of A / J on the non-pivot coordinates.
    std::vector<std::size_t> keep;
    std::vector<std::int64_t> pos(n, -1);
    {
      std::vector<char> is_pivot(n, 0);
      for (auto c : rad.pivots()) is_pivot[c] = 1;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
          pos[c] = static_cast<std::int64_t>(keep.size());
          keep.push_back(c);
        }
    }
    const std::size_t m = keep.size();
    std::vector<SparseVec<F>> qt(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vec<F> prod(n, f.zero());
        for (const auto& [k, t] : spec.table[keep[a] * n + keep[b]]) prod[k] = t;
        Vec<F> red = rad.reduce(prod);
        for (std::size_t c = 0; c < n; ++c)
          if (!f.is_zero(red[c])) qt[a * m + b].emplace_back(static_cast<std::uint32_t>(pos[c]), red[c]);
      }
    if (!detail::centre_is_reduced(f, m, qt)) bad("quotient by the radical is not semisimple");
  }
  if (spec.simple_count == 0 || spec.simple_count > n - rad.dim()) bad("implausible number of simple modules");

  auto d = std::make_shared<detail::AlgebraData<F>>(detail::AlgebraData<F>{
      f, std::move(spec.name), n, std::move(spec.labels), std::move(spec.table), std::move(spec.unit),
      std::move(spec.form), std::move(rad), spec.simple_count, std::move(spec.generators)});
  return FDAlgebra<F>(std::move(d));
}

}  // namespace qci
