#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qci/bimodule.hpp"
#include "qci/constructions.hpp"
#include "qci/qci_derivations.hpp"
#include "qci/lift.hpp"
#include "qci/qci_lie.hpp"
#include "qci/report.hpp"
#include "qci/socle_bounds.hpp"
#include "qci/socle_maps.hpp"
#include "qci/structure.hpp"

namespace qci {

namespace detail {

inline Subspace<PrimeField> monomial_span(const QciAlgebra& q, auto keep) {
  std::vector<Vec<PrimeField>> v;
  for (std::uint32_t i = 0; i < q.p; ++i)
    for (std::uint32_t j = 0; j < q.p; ++j)
      if (keep(i, j)) v.push_back(q.algebra.basis_vector(q.index(i, j)));
  return Subspace<PrimeField>::span(q.algebra.field(), q.dim(), v);
}

}  // namespace detail

/// Structure of the algebra itself: centre, commutators, radical layers, perps.
inline Report algebra_checks(const QciAlgebra& q) {
  const auto& a = q.algebra;
  const std::uint32_t p = q.p, e = q.e, m = (p - 1) / e;
  Report r{p, e, q.q, {}};

  Subspace<PrimeField> z = center(a);
  r.equal("lemma4.2.center_dim", "dim Z(A) = ((p-1)/e)^2 + 2p - 1", m * m + 2 * p - 1, z.dim());
  auto central = [&](std::uint32_t i, std::uint32_t j) {
    return (i % e == 0 && j % e == 0) || i == p - 1 || j == p - 1;
  };
  r.equal("lemma4.2.center_basis", "Z(A) = span{x^i y^j : e | i, j, or i = p-1, or j = p-1}", true,
          z == detail::monomial_span(q, central));
  r.equal("lemma4.2.center_socle_dim", "dim soc(Z(A)) = 2e - 1", 2 * e - 1, center_socle(a).dim());

  Subspace<PrimeField> c = commutator_space(a);
  r.equal("lemma4.3.commutator_dim", "dim [A,A] = (p-1)^2 - ((p-1)/e)^2", (p - 1) * (p - 1) - m * m, c.dim());
  r.equal("lemma4.3.commutator_basis", "[A,A] = span{x^i y^j : 1 <= i, j, e does not divide both}", true,
          c == detail::monomial_span(q, [&](std::uint32_t i, std::uint32_t j) {
            return i >= 1 && j >= 1 && !(i % e == 0 && j % e == 0);
          }));
  r.equal("lemma4.3.center_plus_commutator", "dim Z(A) + dim [A,A] = dim A", a.dim(), z.dim() + c.dim());

  bool layers = true;
  for (std::uint32_t k = 1; k <= 2 * p - 1; ++k)
    layers = layers && radical_power(a, k) == detail::monomial_span(q, [k](std::uint32_t i, std::uint32_t j) {
               return i + j >= k;
             });
  r.equal("sec4.radical_powers", "J(A)^r = span{x^i y^j : i + j >= r}", true, layers);

  Subspace<PrimeField> soc = socle_layer(a, 1);
  r.equal("sec4.socle", "soc(A) = J(A)^perp = span{x^{p-1} y^{p-1}}", true,
          soc == detail::monomial_span(q, [p](std::uint32_t i, std::uint32_t j) { return i == p - 1 && j == p - 1; }));
  r.equal("sec2.commutator_perp", "[A,A]^perp = Z(A)", true, perp(a, c) == z);
  r.equal("lemma.commradtwo", "[A,A] in J(A)^2", true, is_subspace_of(c, radical_power(a, 2)));
  r.equal("lemma.soctwocentral", "soc^2(A) in Z(A)", true, is_subspace_of(socle_layer(a, 2), z));
  return r;
}

/// Der(A), IDer(A), HH^1(A) dimensions and the closed-form constraint system.
inline Report derivation_checks(const QciAlgebra& q) {
  const auto& a = q.algebra;
  const std::uint32_t p = q.p, e = q.e, m = (p - 1) / e;
  Report r{p, e, q.q, {}};
  QciDerivations d = derivations_qci(q);
  r.equal("lemma4.4.constraint_rank", "rank of the constraint system = p^2 - 1 - ((p-1)/e)^2", p * p - 1 - m * m,
          d.constraint_rank);
  r.equal("lemma4.6.der_dim", "dim Der(A) = p^2 + 1 + ((p-1)/e)^2", p * p + 1 + m * m, d.dim());
  std::size_t ider = inner_derivation_signatures(a).dim();
  r.equal("lemma4.6.ider_dim", "dim IDer(A) = dim A - dim Z(A)", a.dim() - center(a).dim(), ider);
  r.equal("prop4.1.hh1_dim", "dim HH^1(A) = 2(p + ((p-1)/e)^2)", 2 * (p + m * m), d.dim() - ider);
  if (p <= 5)
    r.equal("lemma4.4.generic_agrees", "closed-form Der(A) = Leibniz nullspace", true,
            d.flattened() == derivations_generic(a));
  bool radical = true;
  for (const auto& x : d.basis) radical = radical && preserves_radical(x);
  r.equal("sec4.der_preserves_radical", "every derivation maps J(A) into J(A)", true, radical);
  return r;
}

/// Socle-valued derivations from pairings sigma (r = 2): exhaustive over sigma.
inline Report sigma_checks(const QciAlgebra& q) {
  const auto& a = q.algebra;
  const PrimeField& f = a.field();
  Report r{q.p, q.e, q.q, {}};
  auto pairing = socle_two_pairing(a);
  const std::uint32_t p = q.p;
  std::size_t mismatches = 0, derivations = 0;
  EchelonBuilder<PrimeField> span(f, a.dim() * a.dim());
  for (std::uint32_t code = 0; code < p * p * p * p; ++code) {
    Matrix<PrimeField> s(f, 2, 2);
    s(0, 0) = code % p;
    s(0, 1) = code / p % p;
    s(1, 0) = code / (p * p) % p;
    s(1, 1) = code / (p * p * p);
    bool antisymmetric = s(0, 0) == 0 && s(1, 1) == 0 && f.add(s(0, 1), s(1, 0)) == 0;
    auto der = second_socle_map(a, s, pairing);
    if (der.has_value() != antisymmetric) ++mismatches;
    if (der) {
      ++derivations;
      span.add(der->flatten());
    }
  }
  r.equal("prop3.5.sigma_antisymmetric", "the sigma-map is a derivation iff sigma is antisymmetric", 0, mismatches);
  r.equal("prop3.5.derivation_dim", "derivations of this form span r(r-1)/2 = 1 dimension", 1, span.rank());
  r.equal("prop3.5.count", "p antisymmetric sigma", p, derivations);
  return r;
}

/// Brackets, Jacobi, representative independence, restricted structure.
inline Report lie_checks(const QciLie& ql, std::size_t samples = 100) {
  const auto& l = ql.lie;
  const std::uint32_t p = ql.qci.p;
  Report r = verify_lie_structure(ql);
  r.equal("lie.antisymmetry", "[u, u] = 0 on the basis", true, check_antisymmetry(l));
  r.equal("lie.jacobi", "Jacobi identity on all basis triples", true, check_jacobi(l));
  if (p <= 5) r.equal("lie.restricted_ad", "ad(u^[p]) = ad(u)^p", true, check_restricted_ad(l));
  if (p <= 7) {
    auto w = check_well_definedness(l, samples, 0x9e3779b9u + p);
    nlohmann::json got{{"samples", w.samples}, {"bracket", w.bracket}, {"z_action", w.z_action}, {"p_power", w.p_power},
                       {"inner_is_zero", w.inner_is_zero}};
    r.verdict("lie.well_defined", "bracket, Z(A)-action and p-power ignore inner perturbations", samples, got,
              w.samples >= samples && w.bracket && w.z_action && w.p_power && w.inner_is_zero);

    auto b = check_bracket_relations(ql.qci);
    auto tally = [](const RelationTally& t) { return nlohmann::json{{"checked", t.checked}, {"failed", t.failed}}; };
    auto rel = [&](const std::string& id, const std::string& ref, const RelationTally& t) {
      r.verdict(id, ref, nlohmann::json{{"failed", 0}}, tally(t), t.ok());
    };
    rel("lemma5.4.i", "[f_{a,b}, f_{c,d}] = (c-a) f_{a+c-1,b+d}", b.ff);
    rel("lemma5.4.ii", "[g_{a,b}, g_{c,d}] = (d-b) g_{a+c,b+d-1}", b.gg);
    rel("lemma5.4.iii", "[f_{a,b}, g_{c,d}] = 0 if a+c > p-1 or b+d > p-1", b.fg_zero);
    rel("lemma5.4.iv", "[f_{a,b}, g_{c,d}] = -b f_{a+c,b+d-1} + c g_{a+c-1,b+d}", b.fg_mixed);
    rel("lemma5.4.v", "a+c = p-1 or b+d = p-1 only at (0,p-1,p-1,0), bracket (q^-1 - 1)^-1 d_{p-2,p-2}", b.fg_corner);
    r.equal("lemma5.4.v.matrix", "[f_{0,p-1}, g_{p-1,0}] = (q^-1 - 1)^-1 [x^{p-2}y^{p-2}, -] as matrices", true,
            check_corner_bracket_matrix(ql.qci));
    rel("lemma5.5.toral", "eigen-relations of ad f_{1,0}, ad g_{0,1} on X, and [f_{1,0}, g_{0,1}] = 0",
        check_toral_relations(ql.qci));
  }
  return r;
}

/// Socle bound, Brandt, and the three-way equality of dimensions.
inline Report bound_checks(const QciLie& ql) {
  const auto& a = ql.qci.algebra;
  const std::uint32_t p = ql.qci.p, e = ql.qci.e, m = (p - 1) / e;
  Report r{p, e, ql.qci.q, {}};
  SocleBound s = check_socle_bound(a, ql.lie);
  r.verdict("thm1.2.socle_bound", "sum dim Ext^1(S,S) <= dim soc_{Z(A)}(HH^1(A))", nlohmann::json{{"lhs", 2}, {"rhs", 2 * e}},
            nlohmann::json{{"lhs", s.ext1_sum}, {"rhs", s.socle_dim}}, s.holds() && s.ext1_sum == 2 && s.socle_dim == 2 * e);
  BrandtCheck b = check_brandt(a);
  r.verdict("remark3.brandt", "dim Z(A) - l(A) - 1 >= sum dim Ext^1(S,S)",
            nlohmann::json{{"bound", m * m + 2 * p - 3}, {"lhs", 2}},
            nlohmann::json{{"bound", b.bound}, {"lhs", b.ext1_sum}}, b.holds() && b.bound == m * m + 2 * p - 3);
  bool equal_case = b.bound == s.socle_dim;
  r.verdict("remark3.comparison", "Brandt bound >= socle bound, equality iff e = p-1",
            nlohmann::json{{"equal", e == p - 1}}, nlohmann::json{{"brandt", b.bound}, {"socle", s.socle_dim}},
            b.bound >= s.socle_dim && equal_case == (e == p - 1));
  if (a.dim() <= kGenericScaleLimit) {  // bimodule solves have n^2 unknowns
    r.equal("lemma.hhext2.hom_to_socle", "dim Hom_{A^e}(A, soc A) = l(A)", a.simple_count(), hom_a_to_socle(a));
    r.equal("lemma.hhext2.h1_socle", "dim H^1(A; soc A) = dim J/J^2",
            a.radical().dim() - radical_power(a, 2).dim(),
            derivations_with_coefficients(a, BimoduleSpec<PrimeField>::sub(socle_layer(a, 1))).h1_dim());
  }
  if (p <= 5) {
    AsocaCheck c = check_asoca(a);
    std::size_t want = m * m + 2 * p - 2;
    r.verdict("prop3.3.asoca", "dim Z - l = dim Hom(A, A/soc) = dim Hom(J, A)", nlohmann::json::array({want, want, want}),
              nlohmann::json::array({c.center_minus_simples, c.hom_a_to_a_mod_soc, c.hom_j_to_a}),
              c.holds() && c.center_minus_simples == want);
  }
  return r;
}

/// Every check for one QCI instance.
inline Report full_report(const QciLie& ql, std::size_t samples = 100) {
  const QciAlgebra& q = ql.qci;
  Report r{q.p, q.e, q.q, {}};
  r.append(algebra_checks(q));
  r.append(derivation_checks(q));
  if (q.p <= 5 && q.e == 2) r.append(sigma_checks(q));
  r.append(lie_checks(ql, samples));
  r.append(bound_checks(ql));
  return r;
}

inline Report full_report(std::uint32_t p, std::uint32_t e, std::optional<std::uint32_t> q = std::nullopt) {
  return full_report(hh1_qci(p, e, q));
}

/// (p, e) with p an odd prime <= p_max, e | p-1, e >= 2; sorted.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> grid_points(std::uint32_t p_max) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 3; p <= p_max; ++p)
    if (is_prime(p))
      for (std::uint32_t e = 2; e < p; ++e)
        if ((p - 1) % e == 0) out.emplace_back(p, e);
  return out;
}

struct GridSummary {
  std::uint32_t p = 0, e = 0, q = 0;
  std::size_t dim_l = 0, dim_derived = 0, dim_derived_center = 0, dim_socle = 0;
  bool derived_abelian = false;
  std::size_t brandt_bound = 0, socle_bound = 0;
};

inline GridSummary summarize(const QciLie& ql) {
  const auto& l = ql.lie;
  Subspace<PrimeField> lp = l.derived_algebra();
  std::size_t z = center(ql.qci.algebra).dim(), soc = l.socle_as_Z_module().dim();
  return {ql.qci.p,
          ql.qci.e,
          ql.qci.q,
          l.dim(),
          lp.dim(),
          l.center_of(lp).dim(),
          soc,
          l.is_abelian(lp),
          z - ql.qci.algebra.simple_count() - 1,
          soc};
}

inline nlohmann::json to_json(const GridSummary& s) {
  return {{"p", s.p},
          {"e", s.e},
          {"q", s.q},
          {"dim_L", s.dim_l},
          {"dim_L_prime", s.dim_derived},
          {"dim_Z_L_prime", s.dim_derived_center},
          {"dim_soc", s.dim_socle},
          {"L_prime_abelian", s.derived_abelian},
          {"brandt_bound", s.brandt_bound},
          {"socle_bound", s.socle_bound}};
}

/// Checks on k(C_p x| C_{p-1}).
inline Report group_algebra_report(std::uint32_t p) {
  GroupAlgebra g = make_group_algebra_cp_cpm1(p);
  const auto& a = g.algebra;
  Report r{p, 0, 0, {}};  // no (e, q) for the group algebra
  r.equal("remark3.group.center_dim", "dim Z(A) = p (conjugacy classes)", p, center(a).dim());
  r.equal("lemma.hhext2.group.hom_to_socle", "dim Hom_{A^e}(A, soc A) = l(A) = p - 1", p - 1, hom_a_to_socle(a));
  SocleBound s = check_socle_bound(a);
  r.verdict("thm1.2.group.socle_bound", "sum dim Ext^1(S,S) <= dim soc_{Z(A)}(HH^1(A)) = 1",
            nlohmann::json{{"lhs", 0}, {"rhs", 1}}, nlohmann::json{{"lhs", s.ext1_sum}, {"rhs", s.socle_dim}},
            s.holds() && s.socle_dim == 1);
  BrandtCheck b = check_brandt(a);
  r.verdict("remark3.group.brandt", "dim Z(A) - l(A) - 1 = 0 >= sum dim Ext^1(S,S)",
            nlohmann::json{{"bound", 0}}, nlohmann::json{{"bound", b.bound}, {"lhs", b.ext1_sum}},
            b.holds() && b.bound == 0);
  r.equal("remark3.group.comparison", "Brandt bound 0 < socle bound 1", true, b.bound < s.socle_dim);
  if (p <= 3) {
    AsocaCheck c = check_asoca(a);
    r.verdict("prop3.3.group.asoca", "dim Z - l = dim Hom(A, A/soc) = dim Hom(J, A) = 1",
              nlohmann::json::array({1, 1, 1}),
              nlohmann::json::array({c.center_minus_simples, c.hom_a_to_a_mod_soc, c.hom_j_to_a}),
              c.holds() && c.center_minus_simples == 1);
  }
  return r;
}

/// The lifted algebra over Q and its commutative quotient.
inline Report lift_report(std::uint32_t p) {
  require(is_prime(p) && p >= 3, ErrorKind::InvalidParameters, "p must be an odd prime");
  Report r{p, 2, p - 1, {}};
  IntPolynomial f = normalized_f(p);
  bool monomial_mod_p = f.leading() == 1 && f.degree() == static_cast<long>(p);
  for (std::size_t k = 0; k < p; ++k) monomial_mod_p = monomial_mod_p && f.coeff(k) % p == 0;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(c.str());
  r.verdict("sec6.f_p", "f_p = 2 T_p(u/2) is monic and reduces to u^p mod p", f.to_string(),
            nlohmann::json{{"f_p", f.to_string()}, {"coefficients", coeffs}}, monomial_mod_p);

  LiftedAlgebra l = make_lifted_algebra(p);
  r.equal("thm6.lift.dim", "the lifted algebra has rank p^2", p * p, l.algebra.dim());
  // construction rejects non-associative tables: every triple up to dim 50, sampled above
  const std::size_t n = l.algebra.dim();
  r.verdict("thm6.lift.associative", "associativity certified at construction",
            n <= 50 ? "all basis triples" : "2000 sampled triples",
            nlohmann::json{{"triples", n <= 50 ? n * n * n : 2000}}, true);
  r.equal("thm6.lift.reduction", "structure constants reduce mod p to the QCI with q = -1", true, reduces_to_qci(l));

  LiftedCommutators c = lifted_commutator_space(l);
  const std::uint32_t h = (p - 1) / 2;
  r.equal("prop6.2.i.dim", "dim [A,A] = (p-1)^2 - ((p-1)/2)^2", (p - 1) * (p - 1) - h * h, c.span.dim());
  r.equal("prop6.2.i.basis", "[A,A] has basis gamma^i delta^j, 1 <= i, j, i or j odd", true, c.matches_monomials);
  nlohmann::json piv = nlohmann::json::array();
  for (const auto& d : c.pivots) piv.push_back(d.str());
  r.verdict("prop6.2.i.pure", "HNF of the commutator lattice is diagonal on those monomials with pivots prime to p",
            true, nlohmann::json{{"pivots", piv}}, c.pure);

  Subspace<RationalField> ideal = mixed_monomial_ideal(l);
  r.equal("prop6.2.ii.ideal", "ideal generated by [A,A] = A gamma delta = gamma delta A", true,
          ideal_closure(l.algebra, c.span) == ideal && one_sided_multiples(l, true) == ideal &&
              one_sided_multiples(l, false) == ideal);
  QAlgebra d = commutative_quotient(l);
  r.equal("prop6.2.iii.rank", "rank of the commutative quotient D = 2p - 1", 2 * p - 1, d.dim());
  r.equal("prop6.2.iii.commutative", "D is commutative", true, commutator_space(d).is_zero());

  DModP dm = check_D_mod_p_not_symmetric(l);
  r.equal("prop6.2.iv.relations", "mu nu = nu mu = 0 and mu^p = nu^p = 0 in k(x)D", true, dm.relations);
  r.equal("prop6.2.iv.socle_dim", "dim soc(k(x)D) = 2", 2, dm.socle_dim);
  r.equal("prop6.2.iv.not_symmetric", "k(x)D has no nondegenerate symmetrising form", true, dm.no_symmetric_form);
  if (p == 3) {
    std::size_t g = max_gram_rank_exhaustive(dm.algebra);
    r.verdict("prop6.2.iv.exhaustive", "every functional on k(x)D has a degenerate Gram matrix", "< 5", g, g < 5);
  }
  return r;
}

}  // namespace qci
