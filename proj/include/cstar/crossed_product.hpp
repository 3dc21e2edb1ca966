// The crossed product of a block algebra by a finite group action, realized
// two ways: in coordinates f = sum a_g delta_g with the twisted convolution
// product, and concretely as a block algebra through the regular
// representation on H x l^2(G) followed by a Wedderburn decomposition.
#pragma once

#include <optional>

#include "cstar/action.hpp"

namespace cstar {

struct CrossedProductElement {
  std::vector<AlgebraElement> coeffs;  // indexed by group element
};

class CrossedProduct {
 public:
  CrossedProduct(GroupAction action, const Tolerance& tol = {});

  const GroupAction& action() const { return action_; }
  const Tolerance& tolerance() const { return tol_; }
  /// linear dimension dim(A) * |G|
  int dim() const { return dim_; }
  /// shape of the regular representation space H x l^2(G)
  int rep_dim() const { return rep_dim_; }
  /// Wedderburn shape of the crossed product (sorted descending)
  const BlockShape& structure() const { return wd_.shape; }
  const Wedderburn& wedderburn() const { return wd_; }

  CrossedProductElement zero() const;
  CrossedProductElement embed_base(const AlgebraElement& a) const;  // a delta_e
  CrossedProductElement embed_group(int g) const;                   // delta_g
  CrossedProductElement delta(int g, const AlgebraElement& a) const;
  CrossedProductElement add(const CrossedProductElement& f, const CrossedProductElement& h) const;
  CrossedProductElement scale(const CrossedProductElement& f, Cplx c) const;
  /// (f h)(g) = sum_p f(p) alpha_p(h(p^{-1} g))
  CrossedProductElement multiply(const CrossedProductElement& f,
                                 const CrossedProductElement& h) const;
  /// f^*(g) = alpha_g(f(g^{-1}))^*
  CrossedProductElement adjoint(const CrossedProductElement& f) const;
  double distance(const CrossedProductElement& f, const CrossedProductElement& h) const;

  /// faithful representation on H x l^2(G); block (p,q) acts as
  /// alpha_{p^{-1}}(f(p q^{-1}))
  Mat regular_representation(const CrossedProductElement& f) const;

  /// image of f in the decomposed block picture
  AlgebraElement realize(const CrossedProductElement& f) const;
  CrossedProductElement unrealize(const AlgebraElement& x) const;

  /// {v : v (a delta_e) = (a delta_e) v for all a}, inside the crossed
  /// product, computed as a nullspace in the regular representation and
  /// returned over structure()
  Subspace relative_commutant_of_base() const;

  /// Takai dual: the action of the dual group on the decomposed crossed
  /// product scaling the g-coordinate by <g,gamma>, factored into
  /// (perm, unitary) form. Abelian groups only.
  GroupAction dual_action() const;

 private:
  Vec coordinates(const CrossedProductElement& f) const;
  CrossedProductElement from_coordinates(const Vec& c) const;
  const Mat& realize_matrix() const;
  Mat rep_image(const Vec& coords) const;

  GroupAction action_;
  Tolerance tol_;
  int order_, base_dim_, dim_, ambient_n_, rep_dim_;
  std::vector<AlgebraElement> base_units_;
  Mat rep_columns_;  // rep_dim^2 x dim
  BlockShape rep_shape_;
  Wedderburn wd_;
  mutable std::optional<Mat> realize_matrix_;
  mutable std::optional<Eigen::PartialPivLU<Mat>> realize_lu_;
};

}  // namespace cstar
