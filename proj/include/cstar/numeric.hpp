// Dense linear-algebra helpers: rank-revealing kernels, orthonormal spans,
// polar factors and eigenvalue clustering. All rank decisions go through
// Tolerance::cut.
#pragma once

#include <functional>
#include <vector>

#include "cstar/types.hpp"

namespace cstar::num {

/// sigma_max (0 for empty matrices)
double operator_norm(const Mat& a);

/// Orthonormal basis of the column span, kept where sigma > cut(sigma_max).
Mat orthonormal_columns(const Mat& a, const Tolerance& tol);

/// Orthonormal basis of the kernel of `a` (columns of V with small sigma).
Mat kernel_columns(const Mat& a, const Tolerance& tol);

/// Accumulates stacked linear constraints M_1, M_2, ... (all with the same
/// column count) and exposes the kernel of the stack. Internally keeps only
/// an upper-triangular compression so arbitrarily many rows can be added.
class KernelAccumulator {
 public:
  explicit KernelAccumulator(int cols) : cols_(cols), r_(Mat::Zero(0, cols)) {}

  void add(const Mat& m);
  Mat kernel(const Tolerance& tol) const;
  int cols() const { return cols_; }

 private:
  int cols_;
  Mat r_;
};

/// Unitary polar factor U*V^H from the SVD (input must be square, full rank
/// up to the caller's responsibility).
Mat polar_unitary(const Mat& a);

/// Hermitian inverse square root via eigendecomposition.
Mat inverse_sqrt_hermitian(const Mat& a);

/// Groups sorted values into clusters separated by gaps larger than
/// `gap`. Returns per-cluster index lists (indices into the input order).
std::vector<std::vector<int>> cluster_values(const RVec& sorted_values, double gap);

inline bool approx_zero(double x, const Tolerance& tol, double scale = 1.0) {
  return x <= tol.cut(scale);
}

}  // namespace cstar::num
