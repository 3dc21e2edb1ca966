// Subspace calculus on block algebras: commutants, centers, the numerical
// Wedderburn decomposition of a unital *-subalgebra, and primeness.
#pragma once

#include <optional>
#include <vector>

#include "cstar/subspace.hpp"

namespace cstar {

/// Two-sided ideals of a block direct sum are exactly sums of a subset of
/// blocks; the ideal is essential iff the subset is everything.
struct IdealDescriptor {
  std::vector<int> block_subset;

  bool is_essential(const BlockShape& shape) const {
    return int(block_subset.size()) == shape.blocks();
  }
  Subspace subspace(const BlockShape& shape, const Tolerance& tol = {}) const;
};

/// {x in within : xs = sx for every s in the basis of S}. Equals the
/// commutant of the algebra generated by S.
Subspace commutant(const Subspace& S, const Subspace& within, const Tolerance& tol = {});

/// Center of a unital *-subalgebra; verifies the subalgebra axioms first
/// and throws Error("not a subalgebra") when they fail.
Subspace center_of(const Subspace& S, const Tolerance& tol = {});

/// Deterministic pseudo-random elements of a subspace, used wherever a
/// generic element is needed.
AlgebraElement generic_element(const Subspace& S, Rng& rng);
AlgebraElement generic_self_adjoint(const Subspace& S, Rng& rng);

struct WedderburnBlock {
  int m = 0;     // simple block size, p S p ~ M_m
  int mult = 0;  // multiplicity of the block inside the ambient representation
  AlgebraElement central_projection;
  /// minimal projection of S under the central projection (ambient rank = mult)
  AlgebraElement minimal_projection;
  /// ambient N x (m*mult) isometry; column (a + m*c) carries matrix-unit row
  /// a of multiplicity copy c
  Mat isometry;
};

/// Explicit isomorphism S -> (+)_j M_{m_j}.
class Wedderburn {
 public:
  BlockShape base_shape;  // shape the subalgebra lives in
  BlockShape shape;       // simple block sizes, sorted descending
  std::vector<WedderburnBlock> blocks;

  /// image of s (must lie in S) under the isomorphism
  AlgebraElement realize(const AlgebraElement& s) const;
  /// preimage in the base algebra
  AlgebraElement embed(const AlgebraElement& x) const;
};

struct WedderburnOptions {
  /// verify multiplicative closure of the input (switch off for spans that
  /// are closed by construction)
  bool verify_closure = true;
  /// optional known generators of S as an algebra (speeds up large inputs)
  std::vector<AlgebraElement> generator_hint;
};

/// Throws Error("decomposition unresolved") rather than returning a shape
/// that failed its internal consistency checks.
Wedderburn wedderburn_decompose(const Subspace& S, const Tolerance& tol = {},
                                const WedderburnOptions& opts = {});

/// true iff the Wedderburn shape of S has a single block
bool is_prime(const Subspace& S, const Tolerance& tol = {},
              const WedderburnOptions& opts = {});

}  // namespace cstar
