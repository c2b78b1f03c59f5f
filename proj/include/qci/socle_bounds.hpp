#pragma once

#include <cstddef>

#include "qci/bimodule.hpp"
#include "qci/lie.hpp"
#include "qci/socle_maps.hpp"
#include "qci/structure.hpp"

namespace qci {

/// Sum over simple modules S of dim Ext^1_A(S, S). For split local algebras
/// this is dim J/J^2; otherwise it is read off as dim H^1(A; soc(A)).
template <Field F>
std::size_t ext1_self_sum(const FDAlgebra<F>& a) {
  if (is_split_local(a)) return a.radical().dim() - radical_power(a, 2).dim();
  return derivations_with_coefficients(a, BimoduleSpec<F>::sub(socle_layer(a, 1))).h1_dim();
}

struct SocleBound {
  std::size_t ext1_sum = 0;     // left side
  std::size_t socle_dim = 0;    // dim soc_{Z(A)}(HH^1(A))
  bool holds() const { return ext1_sum <= socle_dim; }
};

/// Compares the Ext^1 sum with the Z(A)-socle of HH^1(A), given a Lie
/// structure on HH^1(A).
template <Field F>
SocleBound check_socle_bound(const FDAlgebra<F>& a, const LieStructure<F>& lie) {
  require(a.has_form(), ErrorKind::NotSymmetric, "socle bound needs a symmetrising form");
  require(lie.algebra() == a, ErrorKind::AlgebraMismatch, "Lie structure belongs to another algebra");
  return {ext1_self_sum(a), lie.socle_as_Z_module().dim()};
}

template <Field F>
SocleBound check_socle_bound(const FDAlgebra<F>& a) {
  require(a.has_form(), ErrorKind::NotSymmetric, "socle bound needs a symmetrising form");
  return check_socle_bound(a, hh1_generic(a));
}

struct AsocaCheck {
  std::size_t center_minus_simples = 0;  // dim Z(A) - l(A)
  std::size_t hom_a_to_a_mod_soc = 0;    // dim Hom_{A^e}(A, A/soc A)
  std::size_t hom_j_to_a = 0;            // dim Hom_{A^e}(J(A), A)
  bool holds() const { return center_minus_simples == hom_a_to_a_mod_soc && hom_a_to_a_mod_soc == hom_j_to_a; }
};

template <Field F>
AsocaCheck check_asoca(const FDAlgebra<F>& a) {
  require(a.has_form(), ErrorKind::NotSymmetric, "needs a symmetrising form");
  using Spec = BimoduleSpec<F>;
  Subspace<F> soc = socle_layer(a, 1);
  return {center(a).dim() - a.simple_count(), bimodule_hom(a, Spec::whole(a), Spec::quotient(soc)).dim(),
          bimodule_hom(a, Spec::sub(a.radical()), Spec::whole(a)).dim()};
}

struct BrandtCheck {
  std::size_t bound = 0;     // dim Z(A) - l(A) - 1
  std::size_t ext1_sum = 0;
  bool holds() const { return bound >= ext1_sum; }
};

template <Field F>
BrandtCheck check_brandt(const FDAlgebra<F>& a) {
  require(a.has_form(), ErrorKind::NotSymmetric, "needs a symmetrising form");
  require(!radical_power(a, 2).is_zero(), ErrorKind::PreconditionFailed, "needs J(A)^2 != 0");
  std::size_t z = center(a).dim();
  require(z >= a.simple_count() + 1, ErrorKind::PreconditionFailed, "dim Z(A) must exceed l(A)");
  return {z - a.simple_count() - 1, ext1_self_sum(a)};
}

/// dim Hom_{A^e}(A, soc(A)), which equals the number of simple modules.
template <Field F>
std::size_t hom_a_to_socle(const FDAlgebra<F>& a) {
  using Spec = BimoduleSpec<F>;
  return bimodule_hom(a, Spec::whole(a), Spec::sub(socle_layer(a, 1))).dim();
}

}  // namespace qci
