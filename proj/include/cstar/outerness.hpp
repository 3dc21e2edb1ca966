// Intertwiner spaces, unitary implementation tests (inner / properly outer /
// strictly outer) and the constructive fixed unitary attached to characters
// annihilating the Connes spectrum.
#pragma once

#include <optional>

#include "cstar/crossed_product.hpp"
#include "cstar/spectral.hpp"

namespace cstar {

struct IntertwinerResult {
  /// {x in within : beta(a) x = x a for all a}
  Subspace space;
  /// unitary element of the space when one was found, canonicalized to
  /// determinant-phase one on the first block
  std::optional<AlgebraElement> witness;
  /// true when the absence of a witness is proven (dim <= 1, or a block
  /// vanishes identically on the space), not merely unobserved
  bool conclusive = true;
};

IntertwinerResult implementing_unitaries(const Automorphism& beta, const Subspace& within,
                                         const Tolerance& tol = {});

/// no alpha_g, g != e, is implemented by a unitary of the algebra. Warns via
/// the flag when the algebra is not prime (the notion is stated for prime
/// algebras); throws Error("witness search inconclusive") if a non-prime
/// search cannot be decided.
bool is_properly_outer(const GroupAction& action, const Tolerance& tol = {},
                       bool* warned_not_prime = nullptr);

/// relative commutant of the embedded base in the crossed product is trivial
bool is_strictly_outer(const CrossedProduct& cp);
bool is_strictly_outer(const GroupAction& action, const Tolerance& tol = {});

struct ConnesKernelWitness {
  std::optional<AlgebraElement> unitary;  // u in A^alpha with alpha_{t0} = Ad u
  double intertwining_residual = 0.0;     // max_a ||alpha_{t0}(a) - u a u^*||
  double invariance_residual = 0.0;       // max_g ||alpha_g(u) - u||
  SpectrumSet connes;
};

/// Requires abelian G, a G-prime action and <t0,gamma> = 1 on the Connes
/// spectrum; under those hypotheses a unitary always exists, so an empty
/// result is a falsification event for the caller to flag.
ConnesKernelWitness implementing_unitary_for_connes_kernel(const GroupAction& action, int t0,
                                                           const Tolerance& tol = {});

}  // namespace cstar
