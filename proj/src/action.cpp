#include "cstar/action.hpp"

#include <algorithm>
#include <deque>

#include "cstar/numeric.hpp"

namespace cstar {

Automorphism::Automorphism(const BlockShape& shape, std::vector<int> perm,
                           std::vector<Mat> unitaries, const Tolerance& tol)
    : shape_(shape), perm_(std::move(perm)), u_(std::move(unitaries)) {
  const int k = shape.blocks();
  if (int(perm_.size()) != k || int(u_.size()) != k) throw Error("incompatible shapes");
  std::vector<bool> hit(k, false);
  for (int j = 0; j < k; ++j) {
    if (perm_[j] < 0 || perm_[j] >= k || hit[perm_[j]])
      throw InputError("block permutation is not a permutation");
    hit[perm_[j]] = true;
    if (shape.dims[perm_[j]] != shape.dims[j])
      throw InputError("block permutation does not preserve dimensions");
  }
  inv_perm_.assign(k, 0);
  for (int j = 0; j < k; ++j) inv_perm_[perm_[j]] = j;
  for (int i = 0; i < k; ++i) {
    int n = shape.dims[i];
    if (u_[i].rows() != n || u_[i].cols() != n) throw Error("incompatible shapes");
    if ((u_[i].adjoint() * u_[i] - Mat::Identity(n, n)).norm() > tol.cut(1.0) * n)
      throw InputError("automorphism data is not unitary");
  }
}

Automorphism Automorphism::identity(const BlockShape& shape) {
  std::vector<int> perm(shape.blocks());
  std::vector<Mat> u;
  for (int i = 0; i < shape.blocks(); ++i) {
    perm[i] = i;
    u.push_back(Mat::Identity(shape.dims[i], shape.dims[i]));
  }
  return Automorphism(shape, std::move(perm), std::move(u));
}

Automorphism Automorphism::inner(const AlgebraElement& u, const Tolerance& tol) {
  if (!u.is_unitary(tol)) throw InputError("inner automorphism needs a unitary");
  std::vector<int> perm(u.shape().blocks());
  std::vector<Mat> blocks;
  for (int i = 0; i < u.shape().blocks(); ++i) {
    perm[i] = i;
    blocks.push_back(u.block(i));
  }
  return Automorphism(u.shape(), std::move(perm), std::move(blocks), tol);
}

AlgebraElement Automorphism::apply(const AlgebraElement& a) const {
  if (a.shape() != shape_) throw Error("incompatible shapes");
  AlgebraElement out(shape_);
  for (int i = 0; i < shape_.blocks(); ++i)
    out.block(i) = u_[i] * a.block(inv_perm_[i]) * u_[i].adjoint();
  return out;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (shape_ != other.shape_) throw Error("incompatible shapes");
  const int k = shape_.blocks();
  std::vector<int> perm(k);
  std::vector<Mat> u(k);
  for (int j = 0; j < k; ++j) perm[j] = perm_[other.perm_[j]];
  for (int i = 0; i < k; ++i) u[i] = u_[i] * other.u_[inv_perm_[i]];
  return Automorphism(shape_, std::move(perm), std::move(u));
}

Automorphism Automorphism::inverse() const {
  const int k = shape_.blocks();
  std::vector<int> perm(k);
  std::vector<Mat> u(k);
  for (int j = 0; j < k; ++j) perm[j] = inv_perm_[j];
  for (int j = 0; j < k; ++j) u[j] = u_[perm_[j]].adjoint();
  return Automorphism(shape_, std::move(perm), std::move(u));
}

bool Automorphism::acts_as_identity(const Tolerance& tol) const {
  for (int j = 0; j < shape_.blocks(); ++j)
    if (perm_[j] != j) return false;
  for (const auto& b : matrix_unit_basis(shape_))
    if (!(apply(b) - b).approx_zero(tol)) return false;
  return true;
}

double Automorphism::distance_to(const Automorphism& other) const {
  double d = 0.0;
  for (const auto& b : matrix_unit_basis(shape_))
    d = std::max(d, (apply(b) - other.apply(b)).norm());
  return d;
}

namespace {

// unitary u with phi(x) u = u x for the *-isomorphism phi: M_n -> M_n given
// on matrix units; by Schur the solution space is one-dimensional
Mat solve_block_unitary(const std::vector<Mat>& phi_units, int n, const Tolerance& tol) {
  num::KernelAccumulator acc(n * n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      const Mat& phi = phi_units[c * n + r];  // image of E_{r,c}
      Mat unit = Mat::Zero(n, n);
      unit(r, c) = 1.0;
      Mat constraint(n * n, n * n);
      for (int l = 0; l < n * n; ++l) {
        Mat u = Mat::Zero(n, n);
        u(l % n, l / n) = 1.0;
        Mat res = phi * u - u * unit;
        constraint.col(l) = Eigen::Map<Vec>(res.data(), n * n);
      }
      acc.add(constraint);
    }
  Mat kernel = acc.kernel(tol);
  if (kernel.cols() != 1) throw Error("not an automorphism");
  Mat u = Eigen::Map<const Mat>(kernel.col(0).data(), n, n);
  Mat gram = u.adjoint() * u;
  double scale = gram.trace().real() / n;
  if (scale <= 0 || (gram - scale * Mat::Identity(n, n)).norm() > 1e-7 * n)
    throw Error("not an automorphism");
  return u / std::sqrt(scale);
}

}  // namespace

Automorphism Automorphism::from_linear_map(const BlockShape& shape,
                                           const std::vector<AlgebraElement>& unit_images,
                                           const Tolerance& tol) {
  auto units = matrix_unit_basis(shape);
  if (unit_images.size() != units.size()) throw Error("incompatible shapes");
  const int k = shape.blocks();

  // block permutation from images of the block identity projections
  std::vector<int> perm(k, -1);
  std::vector<bool> taken(k, false);
  int cursor = 0;
  std::vector<std::vector<int>> unit_index(k);
  for (int b = 0; b < k; ++b) {
    unit_index[b].resize(shape.dims[b] * shape.dims[b]);
    for (int idx = 0; idx < shape.dims[b] * shape.dims[b]; ++idx)
      unit_index[b][idx] = cursor++;
  }
  for (int b = 0; b < k; ++b) {
    AlgebraElement z(shape);
    for (int d = 0; d < shape.dims[b]; ++d) {
      int idx = unit_index[b][d * shape.dims[b] + d];  // E_{d,d}
      z = z + unit_images[idx];
    }
    int target = -1;
    for (int i = 0; i < k; ++i) {
      double mass = z.block(i).norm();
      if (mass > 0.5) {
        if (target >= 0) throw Error("not an automorphism");
        target = i;
      }
    }
    if (target < 0 || taken[target] || shape.dims[target] != shape.dims[b])
      throw Error("not an automorphism");
    Mat id_n = Mat::Identity(shape.dims[b], shape.dims[b]);
    if ((z.block(target) - id_n).norm() > 1e-6 * shape.dims[b])
      throw Error("not an automorphism");
    perm[b] = target;
    taken[target] = true;
  }

  std::vector<Mat> unitaries(k);
  for (int b = 0; b < k; ++b) {
    int n = shape.dims[b];
    std::vector<Mat> phi_units(n * n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r)
        phi_units[c * n + r] = unit_images[unit_index[b][c * n + r]].block(perm[b]);
    unitaries[perm[b]] = solve_block_unitary(phi_units, n, tol);
  }

  Automorphism alpha(shape, perm, unitaries, Tolerance{1e-6});
  for (size_t i = 0; i < units.size(); ++i)
    if (!(alpha.apply(units[i]) - unit_images[i]).approx_zero(Tolerance{1e-6}))
      throw Error("not an automorphism");
  return alpha;
}

GroupAction::GroupAction(std::shared_ptr<const FiniteGroup> group, BlockShape shape,
                         std::vector<Automorphism> alphas)
    : group_(std::move(group)), shape_(std::move(shape)), alphas_(std::move(alphas)) {
  if (int(alphas_.size()) != group_->order())
    throw InputError("action must assign an automorphism to every group element");
  for (const auto& a : alphas_)
    if (a.shape() != shape_) throw Error("incompatible shapes");
}

GroupAction GroupAction::from_generators(std::shared_ptr<const FiniteGroup> group,
                                         const BlockShape& shape,
                                         const std::map<int, Automorphism>& generators,
                                         const Tolerance& tol) {
  std::vector<std::optional<Automorphism>> known(group->order());
  known[group->identity()] = Automorphism::identity(shape);
  for (const auto& [g, a] : generators) {
    if (g < 0 || g >= group->order()) throw InputError("action entry out of range");
    if (g != group->identity()) known[g] = a;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int g = 0; g < group->order(); ++g) {
      if (!known[g]) continue;
      for (const auto& [s, a] : generators) {
        int gs = group->mul(g, s);
        if (!known[gs]) {
          known[gs] = known[g]->compose(a);  // alpha_{g s} = alpha_g alpha_s
          grew = true;
        }
      }
    }
  }
  std::vector<Automorphism> alphas;
  for (int g = 0; g < group->order(); ++g) {
    if (!known[g]) throw InputError("action generators do not generate the group");
    alphas.push_back(*known[g]);
  }
  GroupAction action(group, shape, std::move(alphas));
  action.validate(tol);
  return action;
}

void GroupAction::validate(const Tolerance& tol) const {
  auto basis = matrix_unit_basis(shape_);
  if (!alphas_[group_->identity()].acts_as_identity(tol))
    throw Error("not an action (alpha_e is not the identity)");
  for (int g = 0; g < group_->order(); ++g)
    for (int h = 0; h < group_->order(); ++h) {
      int gh = group_->mul(g, h);
      for (const auto& b : basis) {
        AlgebraElement lhs = alphas_[gh].apply(b);
        AlgebraElement rhs = alphas_[g].apply(alphas_[h].apply(b));
        if (!(lhs - rhs).approx_zero(tol))
          throw Error("not an action (violating pair g=" + std::to_string(g) +
                      ", h=" + std::to_string(h) + ")");
      }
    }
}

bool GroupAction::is_faithful(const Tolerance& tol) const {
  for (int g = 0; g < group_->order(); ++g) {
    if (g == group_->identity()) continue;
    if (alphas_[g].acts_as_identity(tol)) return false;
  }
  return true;
}

AlgebraElement GroupAction::average(const AlgebraElement& a) const {
  AlgebraElement sum(shape_);
  for (int g = 0; g < group_->order(); ++g) sum = sum + alphas_[g].apply(a);
  return sum * Cplx(1.0 / group_->order(), 0.0);
}

Subspace GroupAction::fixed_point_algebra(const Tolerance& tol) const {
  auto basis = matrix_unit_basis(shape_);
  std::vector<AlgebraElement> images;
  images.reserve(basis.size());
  for (const auto& b : basis) {
    AlgebraElement e = average(b);
    if ((average(e) - e).frobenius() > tol.cut(1.0) * 16)
      throw Error("averaging projection failed to be idempotent");
    images.push_back(std::move(e));
  }
  return Subspace::span(shape_, images, tol);
}

bool GroupAction::is_G_prime() const {
  const int k = shape_.blocks();
  std::vector<bool> reached(k, false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    for (int g = 0; g < group_->order(); ++g) {
      int nb = alphas_[g].perm()[b];
      if (!reached[nb]) {
        reached[nb] = true;
        queue.push_back(nb);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

GroupAction GroupAction::conjugate(const Automorphism& w) const {
  Automorphism w_inv = w.inverse();
  std::vector<Automorphism> alphas;
  alphas.reserve(alphas_.size());
  for (const auto& a : alphas_) alphas.push_back(w.compose(a).compose(w_inv));
  return GroupAction(group_, shape_, std::move(alphas));
}

}  // namespace cstar
