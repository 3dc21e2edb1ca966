#include "cstar/algebra.hpp"

#include <numeric>

#include "cstar/numeric.hpp"

namespace cstar {

BlockShape::BlockShape(std::vector<int> d) : dims(std::move(d)) {
  if (dims.empty()) throw InputError("block shape needs at least one block");
  for (int n : dims)
    if (n < 1) throw InputError("block dimensions must be positive");
}

int BlockShape::dim() const {
  int s = 0;
  for (int n : dims) s += n * n;
  return s;
}

int BlockShape::ambient_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

int BlockShape::vec_offset(int i) const {
  int s = 0;
  for (int j = 0; j < i; ++j) s += dims[j] * dims[j];
  return s;
}

int BlockShape::ambient_offset(int i) const {
  int s = 0;
  for (int j = 0; j < i; ++j) s += dims[j];
  return s;
}

AlgebraElement::AlgebraElement(const BlockShape& shape) : shape_(shape) {
  blocks_.reserve(shape.blocks());
  for (int n : shape.dims) blocks_.push_back(Mat::Zero(n, n));
}

AlgebraElement::AlgebraElement(const BlockShape& shape, std::vector<Mat> blocks)
    : shape_(shape), blocks_(std::move(blocks)) {
  if (int(blocks_.size()) != shape.blocks()) throw Error("incompatible shapes");
  for (int i = 0; i < shape.blocks(); ++i)
    if (blocks_[i].rows() != shape.dims[i] || blocks_[i].cols() != shape.dims[i])
      throw Error("incompatible shapes");
}

AlgebraElement AlgebraElement::identity(const BlockShape& shape) {
  AlgebraElement a(shape);
  for (int i = 0; i < shape.blocks(); ++i)
    a.blocks_[i] = Mat::Identity(shape.dims[i], shape.dims[i]);
  return a;
}

AlgebraElement AlgebraElement::scalar(const BlockShape& shape, Cplx c) {
  return identity(shape) * c;
}

AlgebraElement AlgebraElement::matrix_unit(const BlockShape& shape, int b, int r, int c) {
  AlgebraElement a(shape);
  a.blocks_[b](r, c) = 1.0;
  return a;
}

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.shape() != b.shape()) throw Error("incompatible shapes");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same_shape(*this, o);
  AlgebraElement r = *this;
  for (int i = 0; i < shape_.blocks(); ++i) r.blocks_[i] += o.blocks_[i];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  require_same_shape(*this, o);
  AlgebraElement r = *this;
  for (int i = 0; i < shape_.blocks(); ++i) r.blocks_[i] -= o.blocks_[i];
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same_shape(*this, o);
  AlgebraElement r(shape_);
  for (int i = 0; i < shape_.blocks(); ++i) r.blocks_[i] = blocks_[i] * o.blocks_[i];
  return r;
}

AlgebraElement AlgebraElement::operator*(Cplx c) const {
  AlgebraElement r = *this;
  for (auto& b : r.blocks_) b *= c;
  return r;
}

AlgebraElement operator*(Cplx c, const AlgebraElement& a) { return a * c; }

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement r(shape_);
  for (int i = 0; i < shape_.blocks(); ++i) r.blocks_[i] = blocks_[i].adjoint();
  return r;
}

double AlgebraElement::norm() const {
  double m = 0.0;
  for (const auto& b : blocks_) m = std::max(m, num::operator_norm(b));
  return m;
}

double AlgebraElement::frobenius() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

Cplx AlgebraElement::trace_inner(const AlgebraElement& o) const {
  require_same_shape(*this, o);
  Cplx s = 0.0;
  for (int i = 0; i < shape_.blocks(); ++i)
    s += (blocks_[i].adjoint() * o.blocks_[i]).trace();
  return s;
}

Vec AlgebraElement::vectorize() const {
  Vec v(shape_.dim());
  for (int i = 0; i < shape_.blocks(); ++i) {
    int n = shape_.dims[i];
    v.segment(shape_.vec_offset(i), n * n) = Eigen::Map<const Vec>(blocks_[i].data(), n * n);
  }
  return v;
}

AlgebraElement AlgebraElement::from_vector(const BlockShape& shape, const Vec& v) {
  if (v.size() != shape.dim()) throw Error("incompatible shapes");
  AlgebraElement a(shape);
  for (int i = 0; i < shape.blocks(); ++i) {
    int n = shape.dims[i];
    a.blocks_[i] = Eigen::Map<const Mat>(v.data() + shape.vec_offset(i), n, n);
  }
  return a;
}

Mat AlgebraElement::ambient() const {
  int N = shape_.ambient_dim();
  Mat m = Mat::Zero(N, N);
  for (int i = 0; i < shape_.blocks(); ++i) {
    int o = shape_.ambient_offset(i), n = shape_.dims[i];
    m.block(o, o, n, n) = blocks_[i];
  }
  return m;
}

AlgebraElement AlgebraElement::from_ambient(const BlockShape& shape, const Mat& m,
                                            double* off_block_mass) {
  int N = shape.ambient_dim();
  if (m.rows() != N || m.cols() != N) throw Error("incompatible shapes");
  AlgebraElement a(shape);
  double on = 0.0;
  for (int i = 0; i < shape.blocks(); ++i) {
    int o = shape.ambient_offset(i), n = shape.dims[i];
    a.blocks_[i] = m.block(o, o, n, n);
    on += a.blocks_[i].squaredNorm();
  }
  double off = std::sqrt(std::max(0.0, m.squaredNorm() - on));
  if (off_block_mass)
    *off_block_mass = off;
  else if (off > 1e-9 * std::max(1.0, std::sqrt(on)))
    throw Error("matrix is not block diagonal");
  return a;
}

bool AlgebraElement::approx_equal(const AlgebraElement& o, const Tolerance& tol) const {
  require_same_shape(*this, o);
  double scale = std::max(frobenius(), o.frobenius());
  return (*this - o).frobenius() <= tol.cut(scale);
}

bool AlgebraElement::approx_zero(const Tolerance& tol) const {
  return frobenius() <= tol.cut(1.0);
}

bool AlgebraElement::is_unitary(const Tolerance& tol) const {
  return (adjoint() * *this).approx_equal(identity(shape_), tol) &&
         (*this * adjoint()).approx_equal(identity(shape_), tol);
}

bool AlgebraElement::is_projection(const Tolerance& tol) const {
  return approx_equal(adjoint(), tol) && approx_equal(*this * *this, tol);
}

std::vector<AlgebraElement> matrix_unit_basis(const BlockShape& shape) {
  std::vector<AlgebraElement> basis;
  basis.reserve(shape.dim());
  for (int b = 0; b < shape.blocks(); ++b)
    for (int c = 0; c < shape.dims[b]; ++c)
      for (int r = 0; r < shape.dims[b]; ++r)
        basis.push_back(AlgebraElement::matrix_unit(shape, b, r, c));
  return basis;
}

}  // namespace cstar
