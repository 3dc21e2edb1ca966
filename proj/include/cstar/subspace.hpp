// Linear subspaces of a block algebra, held as an orthonormal basis with
// respect to the trace inner product <a,b> = sum_i tr(a_i^* b_i).
#pragma once

#include <vector>

#include "cstar/algebra.hpp"

namespace cstar {

class Subspace {
 public:
  /// Orthonormalizes the spanning set (SVD, rank cut at the tolerance).
  static Subspace span(const BlockShape& shape, const std::vector<AlgebraElement>& spanning,
                       const Tolerance& tol = {});
  static Subspace span_vectors(const BlockShape& shape, const Mat& columns,
                               const Tolerance& tol = {});
  /// The whole algebra.
  static Subspace full(const BlockShape& shape);

  const BlockShape& shape() const { return shape_; }
  int dim() const { return int(basis_.cols()); }
  /// D x dim matrix of orthonormal vectorized basis elements
  const Mat& basis_matrix() const { return basis_; }
  AlgebraElement basis_element(int j) const;
  std::vector<AlgebraElement> basis_elements() const;
  AlgebraElement from_coefficients(const Vec& c) const;
  Vec coefficients_of(const AlgebraElement& x) const;

  /// Relative distance of x to the subspace (0 when contained).
  double membership_residual(const AlgebraElement& x) const;
  bool contains(const AlgebraElement& x, const Tolerance& tol) const;
  bool contains_identity(const Tolerance& tol) const;
  bool is_adjoint_closed(const Tolerance& tol) const;
  /// Checks basis products; exhaustive up to `max_pairs` pairs, then a
  /// deterministic sample.
  bool is_multiplicatively_closed(const Tolerance& tol, int max_pairs = 4096) const;

 private:
  Subspace(BlockShape shape, Mat basis) : shape_(std::move(shape)), basis_(std::move(basis)) {}

  BlockShape shape_;
  Mat basis_;  // D x k, orthonormal columns
};

}  // namespace cstar
