#include "cstar/outerness.hpp"

#include "cstar/numeric.hpp"

namespace cstar {

namespace {

// intertwiner equations beta(a) x = x a imposed for a generating set of the
// full algebra, verified on the whole matrix-unit basis afterwards
Subspace intertwiner_space(const Automorphism& beta, const Subspace& within,
                           const Tolerance& tol) {
  const BlockShape& shape = within.shape();
  auto units = matrix_unit_basis(shape);
  auto w = within.basis_elements();
  Subspace full = Subspace::full(shape);
  Rng rng(0x17e21u);
  std::vector<AlgebraElement> gens{generic_self_adjoint(full, rng), generic_element(full, rng)};

  for (int attempt = 0; attempt < 4; ++attempt) {
    num::KernelAccumulator acc(within.dim());
    for (const auto& a : gens) {
      AlgebraElement ba = beta.apply(a);
      Mat constraint(shape.dim(), within.dim());
      for (int l = 0; l < within.dim(); ++l)
        constraint.col(l) = (ba * w[l] - w[l] * a).vectorize();
      acc.add(constraint);
    }
    Mat kernel = acc.kernel(tol);

    bool verified = true;
    for (int j = 0; j < kernel.cols() && verified; ++j) {
      AlgebraElement x = within.from_coefficients(kernel.col(j));
      for (const auto& a : units)
        if ((beta.apply(a) * x - x * a).frobenius() > tol.cut(1.0) * 64) {
          verified = false;
          break;
        }
    }
    if (verified) {
      std::vector<AlgebraElement> elems;
      for (int j = 0; j < kernel.cols(); ++j)
        elems.push_back(within.from_coefficients(kernel.col(j)));
      return Subspace::span(shape, elems, tol);
    }
    gens.push_back(generic_element(full, rng));
  }
  throw Error("decomposition unresolved");
}

bool block_vanishes_on_space(const Subspace& space, const Tolerance& tol) {
  const BlockShape& shape = space.shape();
  for (int i = 0; i < shape.blocks(); ++i) {
    double mass = 0.0;
    for (int j = 0; j < space.dim(); ++j)
      mass = std::max(mass, space.basis_element(j).block(i).norm());
    if (mass <= tol.cut(1.0)) return true;
  }
  return false;
}

bool invertible(const AlgebraElement& x) {
  for (int i = 0; i < x.shape().blocks(); ++i) {
    Eigen::JacobiSVD<Mat> svd(x.block(i));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return false;
    if (sv(sv.size() - 1) <= 1e-6 * std::max(1.0, sv(0))) return false;
  }
  return true;
}

AlgebraElement blockwise_polar(const AlgebraElement& x) {
  AlgebraElement u(x.shape());
  for (int i = 0; i < x.shape().blocks(); ++i) u.block(i) = num::polar_unitary(x.block(i));
  return u;
}

// gauge fix: rotate so the first block has determinant phase one
AlgebraElement canonical_phase(const AlgebraElement& u) {
  Cplx det = u.block(0).determinant();
  if (std::abs(det) < 1e-12) return u;
  double angle = std::arg(det) / u.shape().dims[0];
  return u * std::polar(1.0, -angle);
}

std::optional<AlgebraElement> try_witness(const Automorphism& beta, const Subspace& space,
                                          const Vec& coeffs, const Tolerance& tol) {
  AlgebraElement x = space.from_coefficients(coeffs);
  double scale = x.frobenius();
  if (scale <= tol.cut(1.0)) return std::nullopt;
  x = x * Cplx(1.0 / scale, 0.0);
  if (!invertible(x)) return std::nullopt;
  AlgebraElement u = canonical_phase(blockwise_polar(x));
  if (!u.is_unitary(Tolerance{1e-7})) return std::nullopt;
  if (space.membership_residual(u) > 1e-7) return std::nullopt;
  for (const auto& a : matrix_unit_basis(space.shape()))
    if ((beta.apply(a) * u - u * a).frobenius() > 1e-7) return std::nullopt;
  return u;
}

}  // namespace

IntertwinerResult implementing_unitaries(const Automorphism& beta, const Subspace& within,
                                         const Tolerance& tol) {
  IntertwinerResult result{intertwiner_space(beta, within, tol), std::nullopt, true};
  const Subspace& space = result.space;
  if (space.dim() == 0) return result;

  if (block_vanishes_on_space(space, tol)) return result;  // nothing invertible in there

  std::vector<Vec> candidates;
  for (int j = 0; j < space.dim(); ++j) {
    Vec e = Vec::Zero(space.dim());
    e(j) = 1.0;
    candidates.push_back(e);
  }
  candidates.push_back(Vec::Constant(space.dim(), Cplx(1.0 / std::sqrt(double(space.dim())), 0)));
  Rng rng(0x714e55u);
  for (int t = 0; t < 8; ++t) {
    Vec c(space.dim());
    for (int i = 0; i < c.size(); ++i) c(i) = rng.cgaussian();
    candidates.push_back(c.normalized());
  }

  for (const auto& c : candidates) {
    if (auto u = try_witness(beta, space, c, tol)) {
      result.witness = std::move(u);
      return result;
    }
  }
  // a one-dimensional space is decided by any spanning element
  result.conclusive = space.dim() <= 1;
  return result;
}

bool is_properly_outer(const GroupAction& action, const Tolerance& tol,
                       bool* warned_not_prime) {
  if (warned_not_prime) *warned_not_prime = action.shape().blocks() != 1;
  Subspace full = Subspace::full(action.shape());
  for (int g = 0; g < action.group().order(); ++g) {
    if (g == action.group().identity()) continue;
    IntertwinerResult r = implementing_unitaries(action.alpha(g), full, tol);
    if (r.witness) return false;
    if (!r.conclusive) throw Error("witness search inconclusive");
  }
  return true;
}

bool is_strictly_outer(const CrossedProduct& cp) {
  return cp.relative_commutant_of_base().dim() == 1;
}

bool is_strictly_outer(const GroupAction& action, const Tolerance& tol) {
  return is_strictly_outer(CrossedProduct(action, tol));
}

ConnesKernelWitness implementing_unitary_for_connes_kernel(const GroupAction& action, int t0,
                                                           const Tolerance& tol) {
  const AbelianStructure& st = require_abelian(action);
  if (t0 < 0 || t0 >= action.group().order()) throw InputError("t0 out of range");
  if (!action.is_G_prime()) throw HypothesisError("action is not G-prime");

  ConnesKernelWitness out;
  out.connes = connes_spectrum(action, tol);
  for (int gamma : out.connes.members)
    if (!st.pairing_is_one(t0, gamma))
      throw HypothesisError("precondition violated: t0 does not annihilate Gamma(alpha)");

  Subspace fixed = action.fixed_point_algebra(tol);
  IntertwinerResult r = implementing_unitaries(action.alpha(t0), fixed, tol);
  if (!r.witness) return out;

  const AlgebraElement& u = *r.witness;
  double resid = 0.0;
  for (const auto& a : matrix_unit_basis(action.shape()))
    resid = std::max(resid,
                     (action.alpha(t0).apply(a) - u * a * u.adjoint()).norm());
  out.intertwining_residual = resid;
  double inv = 0.0;
  for (int g = 0; g < action.group().order(); ++g)
    inv = std::max(inv, (action.alpha(g).apply(u) - u).norm());
  out.invariance_residual = inv;
  out.unitary = u;
  return out;
}

}  // namespace cstar
