// Finite-dimensional C*-algebras as direct sums of full complex matrix
// blocks, and their elements. A unital finite-dimensional C*-algebra is its
// own multiplier algebra and its own local multiplier algebra (the only
// essential ideal of a block direct sum is the whole algebra), so elements
// of this type double as multipliers everywhere in the library.
#pragma once

#include <vector>

#include "cstar/types.hpp"

namespace cstar {

struct BlockShape {
  std::vector<int> dims;  // block sizes n_1, ..., n_k

  BlockShape() = default;
  explicit BlockShape(std::vector<int> d);

  int blocks() const { return int(dims.size()); }
  /// linear dimension, sum of n_i^2
  int dim() const;
  /// dimension of the direct-sum column space H = (+) C^{n_i}
  int ambient_dim() const;
  /// offset of block i inside the vectorized element
  int vec_offset(int i) const;
  /// offset of block i inside the ambient space H
  int ambient_offset(int i) const;

  bool operator==(const BlockShape& o) const { return dims == o.dims; }
  bool operator!=(const BlockShape& o) const { return !(*this == o); }
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const BlockShape& shape);  // zero element
  AlgebraElement(const BlockShape& shape, std::vector<Mat> blocks);

  static AlgebraElement zero(const BlockShape& shape) { return AlgebraElement(shape); }
  static AlgebraElement identity(const BlockShape& shape);
  static AlgebraElement scalar(const BlockShape& shape, Cplx c);
  /// e_{r,c} inside block b, zero elsewhere
  static AlgebraElement matrix_unit(const BlockShape& shape, int b, int r, int c);

  const BlockShape& shape() const { return shape_; }
  const Mat& block(int i) const { return blocks_[i]; }
  Mat& block(int i) { return blocks_[i]; }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // blockwise product
  AlgebraElement operator*(Cplx c) const;
  AlgebraElement adjoint() const;

  /// C*-norm: max over blocks of the operator (spectral) norm
  double norm() const;
  double frobenius() const;
  /// trace inner product <a,b> = sum_i tr(a_i^* b_i)
  Cplx trace_inner(const AlgebraElement& o) const;

  Vec vectorize() const;
  static AlgebraElement from_vector(const BlockShape& shape, const Vec& v);

  /// block-diagonal matrix on H = (+) C^{n_i}
  Mat ambient() const;
  /// inverse of ambient(); if off_block_mass is given it receives the
  /// Frobenius mass outside the block diagonal instead of it being an error
  static AlgebraElement from_ambient(const BlockShape& shape, const Mat& m,
                                     double* off_block_mass = nullptr);

  bool approx_equal(const AlgebraElement& o, const Tolerance& tol) const;
  bool approx_zero(const Tolerance& tol) const;
  bool is_unitary(const Tolerance& tol) const;
  bool is_projection(const Tolerance& tol) const;

 private:
  BlockShape shape_;
  std::vector<Mat> blocks_;
};

AlgebraElement operator*(Cplx c, const AlgebraElement& a);

/// canonical basis e_{r,c}^{(b)}, ordered by block then column-major
std::vector<AlgebraElement> matrix_unit_basis(const BlockShape& shape);

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace cstar
