#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qci/error.hpp"
#include "qci/field.hpp"

namespace qci {

template <Field F>
using Vec = std::vector<typename F::value_type>;

template <Field F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::value_type>>;

// ---------------------------------------------------------------------------
// Dense matrix
// ---------------------------------------------------------------------------

template <Field F>
class Matrix {
 public:
  using T = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_ints(F field, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require(rows[r].size() == cols, ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
    }
    return m;
  }

  static Matrix from_rows(F field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require(rows[r].size() == cols, ErrorKind::DimensionMismatch, "row length differs from column count");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Vec<F> row_vec(std::size_t r) const { return Vec<F>(row(r).begin(), row(r).end()); }

  Vec<F> col_vec(std::size_t c) const {
    Vec<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void append_row(std::span<const T> v) {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const T& x) { return field_.is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <Field F>
void require_same_domain(const F& a, const F& b) {
  require(a == b, ErrorKind::DomainMismatch, "operands live over different coefficient domains");
}

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_domain(a.field(), b.field());
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

template <Field F>
Vec<F> matvec(const Matrix<F>& m, std::span<const typename F::value_type> v) {
  require(m.cols() == v.size(), ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  const F& f = m.field();
  Vec<F> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!f.is_zero(v[c])) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

template <Field F>
bool is_zero_vec(const F& f, std::span<const typename F::value_type> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

/// y += a * x
template <Field F>
void axpy(const F& f, const typename F::value_type& a, std::span<const typename F::value_type> x,
          std::span<typename F::value_type> y) {
  if (f.is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
}

template <Field F>
Vec<F> add_vec(const F& f, std::span<const typename F::value_type> a,
               std::span<const typename F::value_type> b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector length mismatch");
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

template <Field F>
Vec<F> sub_vec(const F& f, std::span<const typename F::value_type> a,
               std::span<const typename F::value_type> b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector length mismatch");
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

template <Field F>
Vec<F> scale_vec(const F& f, const typename F::value_type& a, std::span<const typename F::value_type> v) {
  Vec<F> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(a, v[i]);
  return out;
}

template <Field F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

// ---------------------------------------------------------------------------
// Subspace: canonical reduced-row-echelon basis
// ---------------------------------------------------------------------------

template <Field F>
class Subspace {
 public:
  using T = typename F::value_type;

  /// `rref` must already be in reduced row echelon form without zero rows;
  /// use span()/EchelonBuilder to construct from arbitrary vectors.
  Subspace(Matrix<F> rref, std::vector<std::size_t> pivots)
      : basis_(std::move(rref)), pivots_(std::move(pivots)) {}

  static Subspace zero(F field, std::size_t ambient) { return Subspace(Matrix<F>(field, 0, ambient), {}); }

  static Subspace whole(F field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix<F>::identity(field, ambient), std::move(piv));
  }

  static Subspace span(F field, std::size_t ambient, const std::vector<Vec<F>>& vectors);

  const F& field() const noexcept { return basis_.field(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  const Matrix<F>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vec<F> basis_vector(std::size_t i) const { return basis_.row_vec(i); }

  /// Residue of v modulo the subspace: zero exactly on members.
  Vec<F> reduce(std::span<const T> v) const {
    require(v.size() == ambient_dim(), ErrorKind::DimensionMismatch, "vector not in ambient space");
    Vec<F> out(v.begin(), v.end());
    const F& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
      T c = out[pivots_[i]];
      if (!f.is_zero(c)) axpy(f, f.neg(c), basis_.row(i), std::span<T>(out));
    }
    return out;
  }

  bool contains(std::span<const T> v) const { return is_zero_vec(field(), std::span<const T>(reduce(v))); }

  /// Coefficients of v in terms of the canonical basis rows.
  Vec<F> coordinates(std::span<const T> v) const {
    require(contains(v), ErrorKind::NotInSpan, "vector is not in the subspace");
    Vec<F> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool is_zero() const noexcept { return dim() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Incremental echelon builder (sparse rows, kept fully reduced)
// ---------------------------------------------------------------------------

/// Accumulates vectors into a reduced row echelon basis of their span.
/// Rows are stored sparse, so long constraint systems whose rows have few
/// nonzeros (Leibniz systems, commutator spans) stay cheap.
template <Field F>
class EchelonBuilder {
 public:
  using T = typename F::value_type;
  using Entry = std::pair<std::uint32_t, T>;
  using Row = std::vector<Entry>;

  EchelonBuilder(F field, std::size_t cols)
      : field_(field), cols_(cols), pivot_row_(cols, -1), acc_(cols, field.zero()), mark_(cols, 0) {}

  const F& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  bool add(std::span<const T> v) {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "vector length differs from builder width");
    Row entries;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!field_.is_zero(v[c])) entries.emplace_back(static_cast<std::uint32_t>(c), v[c]);
    return add_sparse(entries);
  }

  /// Entries may repeat a column; repeated entries are summed.
  bool add_sparse(const Row& entries) {
    for (const auto& [c, x] : entries) {
      require(c < cols_, ErrorKind::DimensionMismatch, "sparse entry outside builder width");
      touch(c);
      acc_[c] = field_.add(acc_[c], x);
    }
    std::vector<std::uint32_t> hits;
    for (auto c : touched_)
      if (pivot_row_[c] >= 0 && !field_.is_zero(acc_[c])) hits.push_back(c);
    for (auto c : hits) {
      T coef = acc_[c];
      for (const auto& [col, val] : rows_[static_cast<std::size_t>(pivot_row_[c])]) {
        touch(col);
        acc_[col] = field_.sub(acc_[col], field_.mul(coef, val));
      }
    }
    std::uint32_t lead = static_cast<std::uint32_t>(cols_);
    for (auto c : touched_)
      if (!field_.is_zero(acc_[c]) && c < lead) lead = c;
    if (lead == cols_) {
      clear_acc();
      return false;
    }
    std::sort(touched_.begin(), touched_.end());
    T inv = field_.inv(acc_[lead]);
    Row fresh;
    for (auto c : touched_)
      if (!field_.is_zero(acc_[c])) fresh.emplace_back(c, field_.mul(inv, acc_[c]));
    clear_acc();

    for (auto& row : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), lead,
                                 [](const Entry& e, std::uint32_t col) { return e.first < col; });
      if (it == row.end() || it->first != lead) continue;
      T coef = it->second;
      row = combine(row, coef, fresh);
    }
    pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(fresh));
    return true;
  }

  /// Fully reduces v modulo the current span.
  Vec<F> reduce(std::span<const T> v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "vector length differs from builder width");
    Vec<F> out(v.begin(), v.end());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] < 0 || field_.is_zero(out[c])) continue;
      T coef = out[c];
      for (const auto& [col, val] : rows_[static_cast<std::size_t>(pivot_row_[c])])
        out[col] = field_.sub(out[col], field_.mul(coef, val));
    }
    return out;
  }

  bool contains(std::span<const T> v) const {
    return is_zero_vec(field_, std::span<const T>(reduce(v)));
  }

  Subspace<F> subspace() const {
    Matrix<F> m(field_, rows_.size(), cols_);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] < 0) continue;
      for (const auto& [col, val] : rows_[static_cast<std::size_t>(pivot_row_[c])]) m(r, col) = val;
      pivots.push_back(c);
      ++r;
    }
    return Subspace<F>(std::move(m), std::move(pivots));
  }

  /// Canonical basis of the solution space {v : row . v = 0 for every row}.
  Subspace<F> kernel() const {
    std::vector<std::size_t> free_cols;
    std::vector<std::int32_t> free_index(cols_, -1);
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] < 0) {
        free_index[c] = static_cast<std::int32_t>(free_cols.size());
        free_cols.push_back(c);
      }
    std::vector<Vec<F>> gens(free_cols.size(), Vec<F>(cols_, field_.zero()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) gens[k][free_cols[k]] = field_.one();
    for (const auto& row : rows_) {
      std::size_t piv = row.front().first;
      for (const auto& [col, val] : row) {
        if (col == piv) continue;
        gens[static_cast<std::size_t>(free_index[col])][piv] = field_.neg(val);
      }
    }
    if (rank() + free_cols.size() != cols_) throw std::logic_error("rank-nullity violated");
    EchelonBuilder<F> kb(field_, cols_);
    for (const auto& g : gens) kb.add(g);
    if (kb.rank() != free_cols.size()) throw std::logic_error("kernel generators are dependent");
    return kb.subspace();
  }

 private:
  void touch(std::uint32_t c) {
    if (!mark_[c]) {
      mark_[c] = 1;
      touched_.push_back(c);
    }
  }

  void clear_acc() {
    for (auto c : touched_) {
      acc_[c] = field_.zero();
      mark_[c] = 0;
    }
    touched_.clear();
  }

  /// row - coef * other, both sorted by column.
  Row combine(const Row& row, const T& coef, const Row& other) const {
    Row out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
      if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || other[j].first < row[i].first) {
        out.emplace_back(other[j].first, field_.neg(field_.mul(coef, other[j].second)));
        ++j;
      } else {
        T v = field_.sub(row[i].second, field_.mul(coef, other[j].second));
        if (!field_.is_zero(v)) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  F field_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<T> acc_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

template <Field F>
Subspace<F> Subspace<F>::span(F field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
  EchelonBuilder<F> b(field, ambient);
  for (const auto& v : vectors) b.add(v);
  return b.subspace();
}

// ---------------------------------------------------------------------------
// rref / rank / nullspace
// ---------------------------------------------------------------------------

/// Reduced row echelon form with the input's shape (zero rows at the bottom).
template <Field F>
Matrix<F> rref(const Matrix<F>& m) {
  EchelonBuilder<F> b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  Subspace<F> s = b.subspace();
  Matrix<F> out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s.basis()(r, c);
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  EchelonBuilder<F> b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !b.full(); ++r) b.add(m.row(r));
  return b.rank();
}

template <Field F>
Subspace<F> nullspace(const Matrix<F>& m) {
  EchelonBuilder<F> b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !b.full(); ++r) b.add(m.row(r));
  return b.kernel();
}

/// One particular solution of m x = rhs, or nothing when inconsistent.
template <Field F>
std::optional<Vec<F>> solve(const Matrix<F>& m, std::span<const typename F::value_type> rhs) {
  require(rhs.size() == m.rows(), ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  const F& f = m.field();
  EchelonBuilder<F> b(f, m.cols() + 1);
  Vec<F> row(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), row.begin());
    row[m.cols()] = rhs[r];
    b.add(row);
  }
  Subspace<F> s = b.subspace();
  Vec<F> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::size_t piv = s.pivots()[i];
    if (piv == m.cols()) return std::nullopt;
    x[piv] = s.basis()(i, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Subspace lattice
// ---------------------------------------------------------------------------

template <Field F>
void require_compatible(const Subspace<F>& u, const Subspace<F>& v) {
  require_same_domain(u.field(), v.field());
  require(u.ambient_dim() == v.ambient_dim(), ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
}

template <Field F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  require_compatible(u, v);
  EchelonBuilder<F> b(u.field(), u.ambient_dim());
  for (std::size_t i = 0; i < u.dim(); ++i) b.add(u.basis().row(i));
  for (std::size_t i = 0; i < v.dim(); ++i) b.add(v.basis().row(i));
  return b.subspace();
}

template <Field F>
Subspace<F> intersection(const Subspace<F>& u, const Subspace<F>& v) {
  require_compatible(u, v);
  const F& f = u.field();
  // Pairs (a, b) with a.U = b.V, found as the kernel of [U | -V]^T.
  std::size_t k = u.dim() + v.dim();
  EchelonBuilder<F> b(f, k);
  Vec<F> row(k);
  for (std::size_t c = 0; c < u.ambient_dim(); ++c) {
    for (std::size_t i = 0; i < u.dim(); ++i) row[i] = u.basis()(i, c);
    for (std::size_t j = 0; j < v.dim(); ++j) row[u.dim() + j] = f.neg(v.basis()(j, c));
    b.add(row);
    if (b.full()) break;
  }
  Subspace<F> ker = b.kernel();
  std::vector<Vec<F>> gens;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec<F> w(u.ambient_dim(), f.zero());
    for (std::size_t i = 0; i < u.dim(); ++i) axpy(f, ker.basis()(r, i), u.basis().row(i), std::span(w));
    gens.push_back(std::move(w));
  }
  return Subspace<F>::span(f, u.ambient_dim(), gens);
}

template <Field F>
bool is_subspace_of(const Subspace<F>& u, const Subspace<F>& v) {
  require_compatible(u, v);
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!v.contains(u.basis().row(i))) return false;
  return true;
}

/// dim(U / (U ∩ V)) style quotient: dim U - dim V for V ⊆ U.
template <Field F>
std::size_t quotient_dim(const Subspace<F>& u, const Subspace<F>& v) {
  require(is_subspace_of(v, u), ErrorKind::DimensionMismatch, "quotient of a subspace by a non-subspace");
  return u.dim() - v.dim();
}

/// Coordinates of vectors in terms of a fixed, linearly independent family
/// (not necessarily echelonised).
template <Field F>
class CoordinateSolver {
 public:
  using T = typename F::value_type;

  CoordinateSolver(F field, std::size_t ambient, const std::vector<Vec<F>>& family)
      : field_(field), ambient_(ambient), k_(family.size()), aug_(field, 0, 0), pivots_() {
    std::size_t width = ambient + k_;
    EchelonBuilder<F> b(field, width);
    for (std::size_t i = 0; i < k_; ++i) {
      require(family[i].size() == ambient, ErrorKind::DimensionMismatch, "family vector length mismatch");
      Vec<F> row(width, field.zero());
      std::copy(family[i].begin(), family[i].end(), row.begin());
      row[ambient + i] = field.one();
      b.add(row);
    }
    Subspace<F> s = b.subspace();
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (s.pivots()[r] >= ambient) fail(ErrorKind::StructureMismatch, "coordinate family is linearly dependent");
    aug_ = s.basis();
    pivots_ = s.pivots();
  }

  std::size_t size() const noexcept { return k_; }

  Vec<F> coordinates(std::span<const T> v) const {
    require(v.size() == ambient_, ErrorKind::DimensionMismatch, "vector length mismatch");
    Vec<F> residue(v.begin(), v.end());
    Vec<F> coords(k_, field_.zero());
    for (std::size_t r = 0; r < aug_.rows(); ++r) {
      T c = residue[pivots_[r]];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!field_.is_zero(aug_(r, j))) residue[j] = field_.sub(residue[j], field_.mul(c, aug_(r, j)));
      for (std::size_t i = 0; i < k_; ++i)
        if (!field_.is_zero(aug_(r, ambient_ + i)))
          coords[i] = field_.add(coords[i], field_.mul(c, aug_(r, ambient_ + i)));
    }
    require(is_zero_vec(field_, std::span<const T>(residue)), ErrorKind::NotInSpan,
            "vector is not in the span of the family");
    return coords;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::size_t k_;
  Matrix<F> aug_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qci
