#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qci/constructions.hpp"
#include "qci/derivation.hpp"
#include "qci/error.hpp"
#include "qci/linalg.hpp"

namespace qci {

using FpDerivation = Derivation<PrimeField>;

/// Extends prescribed values f(x), f(y) to all monomials by the product rule
/// f(x^c) = f(x^{c-1}) x + x^{c-1} f(x), f(x^c y^d) = f(x^c) y^d + x^c f(y^d).
/// Throws NotADerivation if the values are inadmissible.
inline FpDerivation extend_from_generators(const QciAlgebra& q, const Vec<PrimeField>& fx, const Vec<PrimeField>& fy) {
  const auto& a = q.algebra;
  const PrimeField& f = a.field();
  const std::size_t n = a.dim(), p = q.p;
  require(fx.size() == n && fy.size() == n, ErrorKind::DimensionMismatch, "generator value has wrong length");
  std::vector<Vec<PrimeField>> im(n, Vec<PrimeField>(n, 0));
  im[q.index(1, 0)] = fx;
  im[q.index(0, 1)] = fy;
  for (std::size_t c = 2; c < p; ++c) {
    im[q.index(c, 0)] = add_vec(f, std::span<const std::uint32_t>(a.right_basis(im[q.index(c - 1, 0)], q.index(1, 0))),
                                std::span<const std::uint32_t>(a.left_basis(q.index(c - 1, 0), fx)));
    im[q.index(0, c)] = add_vec(f, std::span<const std::uint32_t>(a.right_basis(im[q.index(0, c - 1)], q.index(0, 1))),
                                std::span<const std::uint32_t>(a.left_basis(q.index(0, c - 1), fy)));
  }
  for (std::size_t c = 1; c < p; ++c)
    for (std::size_t d = 1; d < p; ++d)
      im[q.index(c, d)] = add_vec(f, std::span<const std::uint32_t>(a.right_basis(im[q.index(c, 0)], q.index(0, d))),
                                  std::span<const std::uint32_t>(a.left_basis(q.index(c, 0), im[q.index(0, d)])));
  return FpDerivation(a, std::move(im));
}

/// The linear conditions on the coefficients alpha_{i,j} (of f(x)) and
/// beta_{i,j} (of f(y)) characterising derivations. Unknown alpha_{i,j} sits
/// at i*p + j, beta_{i,j} at p^2 + i*p + j. Only nonzero rows are kept.
inline Matrix<PrimeField> qci_constraint_matrix(const QciAlgebra& q) {
  const std::uint32_t p = q.p;
  PrimeField f(p);
  const std::size_t pp = static_cast<std::size_t>(p) * p;
  auto alpha = [p](std::size_t i, std::size_t j) { return i * p + j; };
  auto beta = [p, pp](std::size_t i, std::size_t j) { return pp + i * p + j; };
  Matrix<PrimeField> m(f, 0, 2 * pp);
  Vec<PrimeField> row(2 * pp, 0);
  auto push = [&] {
    if (!is_zero_vec(f, std::span<const std::uint32_t>(row))) m.append_row(row);
    std::fill(row.begin(), row.end(), 0);
  };
  // (1) alpha_{i,j-1}(1-q^{i-1}) + beta_{i-1,j}(1-q^{j-1}) = 0
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 1; j < p; ++j) {
      row[alpha(i, j - 1)] = f.sub(1, f.pow(q.q, i - 1));
      row[beta(i - 1, j)] = f.sub(1, f.pow(q.q, j - 1));
      push();
    }
  // (2) alpha_{0,j-1} = 0
  for (std::size_t j = 1; j < p; ++j) {
    row[alpha(0, j - 1)] = 1;
    push();
  }
  // (3) beta_{i-1,0} = 0
  for (std::size_t i = 1; i < p; ++i) {
    row[beta(i - 1, 0)] = 1;
    push();
  }
  return m;
}

struct QciDerivations {
  QciAlgebra algebra;
  std::size_t constraint_rows = 0;
  std::size_t constraint_rank = 0;
  /// Admissible (f(x), f(y)) coefficient vectors.
  Subspace<PrimeField> coefficient_space;
  std::vector<FpDerivation> basis;

  std::size_t dim() const { return basis.size(); }

  /// The same space in flattened n^2 coordinates.
  Subspace<PrimeField> flattened() const {
    const std::size_t n = algebra.dim();
    EchelonBuilder<PrimeField> b(algebra.algebra.field(), n * n);
    for (const auto& d : basis) b.add(d.flatten());
    return b.subspace();
  }

  /// The same space in signature coordinates (values at x and y).
  Subspace<PrimeField> signatures() const {
    EchelonBuilder<PrimeField> b(algebra.algebra.field(), 2 * algebra.dim());
    for (const auto& d : basis) b.add(d.signature());
    return b.subspace();
  }
};

/// Der(A) from the closed-form conditions on f(x), f(y).
inline QciDerivations derivations_qci(const QciAlgebra& q) {
  Matrix<PrimeField> c = qci_constraint_matrix(q);
  const std::size_t pp = static_cast<std::size_t>(q.p) * q.p;
  Subspace<PrimeField> sol = nullspace(c);
  QciDerivations out{q, c.rows(), rank(c), sol, {}};
  // alpha_{i,j} is the coefficient of x^i y^j, which is basis index i*p + j.
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    auto row = sol.basis().row(r);
    Vec<PrimeField> fx(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pp));
    Vec<PrimeField> fy(row.begin() + static_cast<std::ptrdiff_t>(pp), row.end());
    out.basis.push_back(extend_from_generators(q, fx, fy));
  }
  return out;
}

inline QciDerivations derivations_qci(std::uint32_t p, std::uint32_t e, std::optional<std::uint32_t> q = std::nullopt) {
  return derivations_qci(make_qci(p, e, q));
}

/// f_{a,b}: x -> x^a y^b, y -> 0;  g_{a,b}: x -> 0, y -> x^a y^b.
struct MonomialDerivationId {
  char kind = 'f';
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  std::string name() const { return std::string(1, kind) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}"; }
  friend bool operator==(const MonomialDerivationId&, const MonomialDerivationId&) = default;
};

inline bool monomial_derivation_exists(const MonomialDerivationId& id, std::uint32_t p, std::uint32_t e) {
  if (id.a >= p || id.b >= p) return false;
  if (id.kind == 'f') return id.b == p - 1 || (id.a >= 1 && (id.a - 1) % e == 0);
  if (id.kind == 'g') return id.a == p - 1 || (id.b >= 1 && (id.b - 1) % e == 0);
  return false;
}

/// The derivation with one generator sent to a monomial and the other to
/// zero, built monomial by monomial from the closed-form value formula:
/// f_{a,b}(x^c y^d) = (sum_{s<c} q^{bs}) x^{a+c-1} y^{b+d},
/// g_{a,b}(x^c y^d) = (sum_{t<d} q^{at}) x^{a+c} y^{b+d-1}.
inline FpDerivation monomial_derivation(const MonomialDerivationId& id, const QciAlgebra& q) {
  require(id.kind == 'f' || id.kind == 'g', ErrorKind::InvalidParameters, "kind must be f or g");
  require(monomial_derivation_exists(id, q.p, q.e), ErrorKind::NoSuchDerivation, "no derivation " + id.name());
  const PrimeField& f = q.algebra.field();
  const std::size_t n = q.dim(), p = q.p;
  std::vector<Vec<PrimeField>> im(n, Vec<PrimeField>(n, 0));
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t d = 0; d < p; ++d) {
      std::uint32_t coef = 0;
      std::size_t i = 0, j = 0;
      if (id.kind == 'f') {
        if (c == 0) continue;
        for (std::size_t s = 0; s < c; ++s) coef = f.add(coef, f.pow(q.q, id.b * s));
        i = id.a + c - 1;
        j = id.b + d;
      } else {
        if (d == 0) continue;
        for (std::size_t t = 0; t < d; ++t) coef = f.add(coef, f.pow(q.q, id.a * t));
        i = id.a + c;
        j = id.b + d - 1;
      }
      if (i < p && j < p) im[q.index(c, d)][q.index(i, j)] = coef;
    }
  return FpDerivation(q.algebra, std::move(im));
}

inline bool in_basis_X(const MonomialDerivationId& id, std::uint32_t p, std::uint32_t e) {
  if (id.a >= p || id.b >= p) return false;
  if (id.kind == 'f') return (id.a >= 1 && (id.a - 1) % e == 0 && id.b % e == 0) || id.b == p - 1;
  return (id.a % e == 0 && id.b >= 1 && (id.b - 1) % e == 0) || id.a == p - 1;
}

/// Ids of X: first the f's with e | a-1 and e | b, then the remaining f's
/// with b = p-1; likewise for g with the roles of a and b swapped.
inline std::vector<MonomialDerivationId> basis_X_ids(std::uint32_t p, std::uint32_t e) {
  validate_qci_parameters(p, e, std::nullopt);
  std::vector<MonomialDerivationId> ids;
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      if ((a - 1) % e == 0 && b % e == 0) ids.push_back({'f', a, b});
  for (std::uint32_t a = 0; a < p; ++a)
    if (!((a >= 1 && (a - 1) % e == 0) && (p - 1) % e == 0)) ids.push_back({'f', a, p - 1});
  for (std::uint32_t b = 1; b < p; ++b)
    for (std::uint32_t a = 0; a < p; ++a)
      if ((b - 1) % e == 0 && a % e == 0) ids.push_back({'g', a, b});
  for (std::uint32_t b = 0; b < p; ++b)
    if (!((b >= 1 && (b - 1) % e == 0) && (p - 1) % e == 0)) ids.push_back({'g', p - 1, b});
  return ids;
}

struct NamedDerivation {
  MonomialDerivationId id;
  FpDerivation derivation;
};

inline std::vector<NamedDerivation> basis_X(const QciAlgebra& q) {
  std::vector<NamedDerivation> out;
  for (const auto& id : basis_X_ids(q.p, q.e)) out.push_back({id, monomial_derivation(id, q)});
  return out;
}

inline std::vector<NamedDerivation> basis_X(std::uint32_t p, std::uint32_t e) { return basis_X(make_qci(p, e)); }

/// d_{i,j} = [x^i y^j, -].
inline FpDerivation inner_monomial(const QciAlgebra& q, std::size_t i, std::size_t j) {
  return inner_derivation(q.algebra, std::span<const std::uint32_t>(q.algebra.basis_vector(q.index(i, j))));
}

}  // namespace qci
