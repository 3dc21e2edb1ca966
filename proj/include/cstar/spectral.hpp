// Spectral subspaces and the Arveson / Connes spectra of finite abelian
// group actions.
#pragma once

#include <vector>

#include "cstar/action.hpp"

namespace cstar {

/// subset of the dual group, canonically sorted
struct SpectrumSet {
  std::vector<int> members;

  bool contains(int gamma) const;
  bool operator==(const SpectrumSet& o) const { return members == o.members; }
  bool operator!=(const SpectrumSet& o) const { return !(*this == o); }
  bool subset_of(const SpectrumSet& o) const;
  /// closed under addition and negation inside the dual group
  bool is_subgroup(const AbelianStructure& dual) const;
};

/// A_gamma = {a : alpha_g(a) = <g,gamma> a}, the image of the averaging
/// projection P_gamma = 1/|G| sum conj(<g,gamma>) alpha_g.
Subspace spectral_subspace(const GroupAction& action, int gamma_index,
                           const Tolerance& tol = {});
AlgebraElement spectral_projection_apply(const GroupAction& action, int gamma_index,
                                         const AlgebraElement& a);

/// {gamma : A_gamma != 0}
SpectrumSet arveson_spectrum(const GroupAction& action, const Tolerance& tol = {});

/// Arveson spectrum of the action compressed to pAp for an invariant
/// projection p (throws "not an invariant projection" otherwise).
SpectrumSet restricted_spectrum(const GroupAction& action, const AlgebraElement& p,
                                const Tolerance& tol = {});

/// Intersection of restricted spectra over one minimal projection of the
/// fixed-point algebra per central block; hereditary subalgebras of a block
/// direct sum are compressions by projections in A^alpha, conjugate minimal
/// projections give equal restricted spectra, and monotonicity reduces the
/// intersection to minimal ones.
SpectrumSet connes_spectrum(const GroupAction& action, const Tolerance& tol = {});

/// throws HypothesisError("abelian required") unless the group carries an
/// abelian structure
const AbelianStructure& require_abelian(const GroupAction& action);

}  // namespace cstar
