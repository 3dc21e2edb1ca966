#include "cstar/spectral.hpp"

#include <algorithm>

namespace cstar {

bool SpectrumSet::contains(int gamma) const {
  return std::binary_search(members.begin(), members.end(), gamma);
}

bool SpectrumSet::subset_of(const SpectrumSet& o) const {
  return std::all_of(members.begin(), members.end(),
                     [&](int g) { return o.contains(g); });
}

bool SpectrumSet::is_subgroup(const AbelianStructure& dual) const {
  if (!contains(0)) return false;
  for (int a : members) {
    if (!contains(dual.negate(a))) return false;
    for (int b : members)
      if (!contains(dual.add(a, b))) return false;
  }
  return true;
}

const AbelianStructure& require_abelian(const GroupAction& action) {
  if (!action.group().abelian().has_value()) throw HypothesisError("abelian required");
  return *action.group().abelian();
}

AlgebraElement spectral_projection_apply(const GroupAction& action, int gamma_index,
                                         const AlgebraElement& a) {
  const auto& st = require_abelian(action);
  AlgebraElement sum(action.shape());
  for (int g = 0; g < action.group().order(); ++g)
    sum = sum + std::conj(st.pairing(g, gamma_index)) * action.alpha(g).apply(a);
  return sum * Cplx(1.0 / action.group().order(), 0.0);
}

Subspace spectral_subspace(const GroupAction& action, int gamma_index, const Tolerance& tol) {
  require_abelian(action);
  auto basis = matrix_unit_basis(action.shape());
  std::vector<AlgebraElement> images;
  images.reserve(basis.size());
  for (const auto& b : basis) {
    AlgebraElement e = spectral_projection_apply(action, gamma_index, b);
    if ((spectral_projection_apply(action, gamma_index, e) - e).frobenius() > tol.cut(1.0) * 16)
      throw Error("spectral projection failed to be idempotent");
    images.push_back(std::move(e));
  }
  return Subspace::span(action.shape(), images, tol);
}

SpectrumSet arveson_spectrum(const GroupAction& action, const Tolerance& tol) {
  const auto& st = require_abelian(action);
  SpectrumSet sp;
  for (int gamma = 0; gamma < st.order(); ++gamma)
    if (spectral_subspace(action, gamma, tol).dim() > 0) sp.members.push_back(gamma);
  return sp;
}

SpectrumSet restricted_spectrum(const GroupAction& action, const AlgebraElement& p,
                                const Tolerance& tol) {
  const auto& st = require_abelian(action);
  if (!p.is_projection(tol)) throw Error("not an invariant projection");
  for (int g = 0; g < action.group().order(); ++g)
    if (!(action.alpha(g).apply(p) - p).approx_zero(tol))
      throw Error("not an invariant projection");

  std::vector<AlgebraElement> compressed;
  for (const auto& b : matrix_unit_basis(action.shape())) compressed.push_back(p * b * p);
  Subspace corner = Subspace::span(action.shape(), compressed, tol);

  SpectrumSet sp;
  for (int gamma = 0; gamma < st.order(); ++gamma) {
    std::vector<AlgebraElement> images;
    for (int j = 0; j < corner.dim(); ++j)
      images.push_back(spectral_projection_apply(action, gamma, corner.basis_element(j)));
    if (Subspace::span(action.shape(), images, tol).dim() > 0) sp.members.push_back(gamma);
  }
  return sp;
}

SpectrumSet connes_spectrum(const GroupAction& action, const Tolerance& tol) {
  const auto& st = require_abelian(action);
  Subspace fixed = action.fixed_point_algebra(tol);
  WedderburnOptions opts;
  opts.verify_closure = false;  // averaging image is closed by construction
  Wedderburn wd = wedderburn_decompose(fixed, tol, opts);

  SpectrumSet gamma;
  for (int g = 0; g < st.order(); ++g) gamma.members.push_back(g);
  for (const auto& blk : wd.blocks) {
    SpectrumSet restricted = restricted_spectrum(action, blk.minimal_projection, tol);
    std::vector<int> kept;
    std::set_intersection(gamma.members.begin(), gamma.members.end(),
                          restricted.members.begin(), restricted.members.end(),
                          std::back_inserter(kept));
    gamma.members = std::move(kept);
  }
  return gamma;
}

}  // namespace cstar
