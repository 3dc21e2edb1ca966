#include "cstar/subspace.hpp"

#include "cstar/numeric.hpp"

namespace cstar {

Subspace Subspace::span(const BlockShape& shape, const std::vector<AlgebraElement>& spanning,
                        const Tolerance& tol) {
  Mat cols(shape.dim(), spanning.size());
  for (size_t j = 0; j < spanning.size(); ++j) {
    if (spanning[j].shape() != shape) throw Error("incompatible shapes");
    cols.col(j) = spanning[j].vectorize();
  }
  return span_vectors(shape, cols, tol);
}

Subspace Subspace::span_vectors(const BlockShape& shape, const Mat& columns,
                                const Tolerance& tol) {
  if (columns.rows() != shape.dim()) throw Error("incompatible shapes");
  return Subspace(shape, num::orthonormal_columns(columns, tol));
}

Subspace Subspace::full(const BlockShape& shape) {
  return Subspace(shape, Mat::Identity(shape.dim(), shape.dim()));
}

AlgebraElement Subspace::basis_element(int j) const {
  return AlgebraElement::from_vector(shape_, basis_.col(j));
}

std::vector<AlgebraElement> Subspace::basis_elements() const {
  std::vector<AlgebraElement> out;
  out.reserve(dim());
  for (int j = 0; j < dim(); ++j) out.push_back(basis_element(j));
  return out;
}

AlgebraElement Subspace::from_coefficients(const Vec& c) const {
  return AlgebraElement::from_vector(shape_, basis_ * c);
}

Vec Subspace::coefficients_of(const AlgebraElement& x) const {
  return basis_.adjoint() * x.vectorize();
}

double Subspace::membership_residual(const AlgebraElement& x) const {
  Vec v = x.vectorize();
  Vec proj = basis_ * (basis_.adjoint() * v);
  return (v - proj).norm() / std::max(1.0, v.norm());
}

bool Subspace::contains(const AlgebraElement& x, const Tolerance& tol) const {
  return membership_residual(x) <= tol.epsilon;
}

bool Subspace::contains_identity(const Tolerance& tol) const {
  return contains(AlgebraElement::identity(shape_), tol);
}

bool Subspace::is_adjoint_closed(const Tolerance& tol) const {
  for (int j = 0; j < dim(); ++j)
    if (!contains(basis_element(j).adjoint(), tol)) return false;
  return true;
}

bool Subspace::is_multiplicatively_closed(const Tolerance& tol, int max_pairs) const {
  const int k = dim();
  auto elems = basis_elements();
  if (std::int64_t(k) * k <= max_pairs) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!contains(elems[i] * elems[j], tol)) return false;
    return true;
  }
  Rng rng(0x5eed0001u);
  for (int t = 0; t < max_pairs; ++t) {
    int i = rng.uniform_int(0, k - 1), j = rng.uniform_int(0, k - 1);
    if (!contains(elems[i] * elems[j], tol)) return false;
  }
  return true;
}

}  // namespace cstar
