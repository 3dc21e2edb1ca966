// *-automorphisms of block algebras in (block permutation, per-block
// unitary) form, and verified finite group actions.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cstar/algebra_ops.hpp"
#include "cstar/group.hpp"
#include "cstar/subspace.hpp"

namespace cstar {

/// alpha(a)_i = u_i a_{perm^{-1}(i)} u_i^*. Every *-automorphism of a block
/// direct sum has this form; the constructor enforces it.
class Automorphism {
 public:
  Automorphism(const BlockShape& shape, std::vector<int> perm, std::vector<Mat> unitaries,
               const Tolerance& tol = {});
  static Automorphism identity(const BlockShape& shape);
  /// Ad u for a unitary element (trivial permutation)
  static Automorphism inner(const AlgebraElement& u, const Tolerance& tol = {});
  /// Factors a linear map, given by its images of the canonical matrix-unit
  /// basis, into (perm, unitaries); throws Error("not an automorphism").
  static Automorphism from_linear_map(const BlockShape& shape,
                                      const std::vector<AlgebraElement>& unit_images,
                                      const Tolerance& tol = {});

  const BlockShape& shape() const { return shape_; }
  const std::vector<int>& perm() const { return perm_; }
  const Mat& unitary(int i) const { return u_[i]; }

  AlgebraElement apply(const AlgebraElement& a) const;
  /// this after other: (compose(other))(a) = this(other(a))
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;
  bool acts_as_identity(const Tolerance& tol) const;
  /// max over the matrix-unit basis of ||this(b) - other(b)||
  double distance_to(const Automorphism& other) const;

 private:
  BlockShape shape_;
  std::vector<int> perm_, inv_perm_;
  std::vector<Mat> u_;  // indexed by target block
};

class GroupAction {
 public:
  GroupAction(std::shared_ptr<const FiniteGroup> group, BlockShape shape,
              std::vector<Automorphism> alphas);
  /// closure of generator automorphisms along group words; throws InputError
  /// when the listed elements do not generate.
  static GroupAction from_generators(std::shared_ptr<const FiniteGroup> group,
                                     const BlockShape& shape,
                                     const std::map<int, Automorphism>& generators,
                                     const Tolerance& tol = {});

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const BlockShape& shape() const { return shape_; }
  const Automorphism& alpha(int g) const { return alphas_[g]; }

  /// checks alpha_e = id and the composition law on a basis; throws
  /// Error("not an action ...") naming the violating pair.
  void validate(const Tolerance& tol = {}) const;
  bool is_faithful(const Tolerance& tol = {}) const;
  /// image of the averaging projection E = 1/|G| sum alpha_g
  Subspace fixed_point_algebra(const Tolerance& tol = {}) const;
  AlgebraElement average(const AlgebraElement& a) const;
  /// true iff the block permutation action is transitive (in finite
  /// dimension the invariant ideals are invariant block subsets)
  bool is_G_prime() const;
  /// conjugated action g -> w alpha_g w^{-1}
  GroupAction conjugate(const Automorphism& w) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  BlockShape shape_;
  std::vector<Automorphism> alphas_;
};

}  // namespace cstar
