#include "cstar/harness/generate.hpp"

#include <Eigen/QR>
#include <algorithm>

namespace cstar::harness {

Family family_from_string(const std::string& name) {
  if (name == "inner") return Family::inner;
  if (name == "block-permutation" || name == "block_permutation")
    return Family::block_permutation;
  if (name == "gauge") return Family::gauge;
  if (name == "mixed") return Family::mixed;
  throw InputError("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::inner: return "inner";
    case Family::block_permutation: return "block-permutation";
    case Family::gauge: return "gauge";
    case Family::mixed: return "mixed";
  }
  return "?";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams{Family::inner, Family::block_permutation,
                                        Family::gauge, Family::mixed};
  return fams;
}

namespace {

const std::vector<std::vector<int>>& group_pool() {
  static const std::vector<std::vector<int>> pool{{2}, {3}, {4}, {2, 2}};
  return pool;
}

Mat haar_unitary(int n, Rng& rng) {
  Mat g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.cgaussian();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Cplx d = r(i, i);
    q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Cplx(1, 0);
  }
  return q;
}

std::shared_ptr<const FiniteGroup> make_group(const std::vector<int>& factors) {
  return std::make_shared<FiniteGroup>(FiniteGroup::from_abelian_factors(factors));
}

// diagonal of the characters kappa_i evaluated at g
Mat character_diagonal(const AbelianStructure& st, const std::vector<int>& kappa, int g) {
  Mat d = Mat::Zero(kappa.size(), kappa.size());
  for (size_t i = 0; i < kappa.size(); ++i) d(i, i) = st.pairing(g, kappa[i]);
  return d;
}

// single-block action g -> Ad(W diag(<g,kappa_i>) W^*)
GroupAction diagonal_character_action(std::shared_ptr<const FiniteGroup> group, int n,
                                      const std::vector<int>& kappa, const Mat& w) {
  const AbelianStructure& st = *group->abelian();
  BlockShape shape({n});
  std::map<int, Automorphism> gens;
  for (size_t j = 0; j < st.factors().size(); ++j) {
    std::vector<int> tuple(st.factors().size(), 0);
    tuple[j] = 1;
    int g = st.index_of(tuple);
    Mat u = w * character_diagonal(st, kappa, g) * w.adjoint();
    gens.emplace(g, Automorphism(shape, {0}, {u}));
  }
  return GroupAction::from_generators(group, shape, gens);
}

std::vector<int> sample_characters(const AbelianStructure& st, int n, Rng& rng) {
  std::vector<int> kappa(n);
  for (int i = 0; i < n; ++i) kappa[i] = rng.uniform_int(0, st.order() - 1);
  return kappa;
}

// fallback slot characters that always separate the group: 0, the dual
// generators, then everything else in index order
std::vector<int> canonical_characters(const AbelianStructure& st, int n) {
  std::vector<int> kappa;
  kappa.push_back(0);
  for (size_t j = 0; j < st.factors().size() && int(kappa.size()) < n; ++j) {
    std::vector<int> tuple(st.factors().size(), 0);
    tuple[j] = 1;
    kappa.push_back(st.index_of(tuple));
  }
  for (int g = 1; int(kappa.size()) < n; ++g) kappa.push_back(g % st.order());
  return kappa;
}

GroupAction character_action_faithful(std::shared_ptr<const FiniteGroup> group, int n,
                                      const Mat& w, Rng& rng) {
  const AbelianStructure& st = *group->abelian();
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto kappa = sample_characters(st, n, rng);
    GroupAction action = diagonal_character_action(group, n, kappa, w);
    if (action.is_faithful()) return action;
  }
  return diagonal_character_action(group, n, canonical_characters(st, n), w);
}

// Weyl pair on M_2 for Z2 x Z2: anticommuting self-inverse unitaries give a
// faithful projectively-inner action
GroupAction weyl_pair_action(std::shared_ptr<const FiniteGroup> group, Rng& rng) {
  BlockShape shape({2});
  Mat w = haar_unitary(2, rng);
  Mat sx(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  std::map<int, Automorphism> gens;
  const AbelianStructure& st = *group->abelian();
  gens.emplace(st.index_of({1, 0}), Automorphism(shape, {0}, {Mat(w * sx * w.adjoint())}));
  gens.emplace(st.index_of({0, 1}), Automorphism(shape, {0}, {Mat(w * sz * w.adjoint())}));
  return GroupAction::from_generators(group, shape, gens);
}

Automorphism random_inner(const BlockShape& shape, Rng& rng) {
  std::vector<int> perm(shape.blocks());
  std::vector<Mat> u(shape.blocks());
  for (int i = 0; i < shape.blocks(); ++i) {
    perm[i] = i;
    u[i] = haar_unitary(shape.dims[i], rng);
  }
  return Automorphism(shape, std::move(perm), std::move(u));
}

// translation of G on the cosets of H, with a per-slot character twist on
// every block of size m
GroupAction coset_translation_action(std::shared_ptr<const FiniteGroup> group,
                                     const std::vector<int>& H, int m,
                                     const std::vector<int>& kappa) {
  const AbelianStructure& st = *group->abelian();
  auto reps = group->quotient_transversal(H);
  const int k = int(reps.size());
  std::vector<int> coset_of(group->order(), -1);
  for (int i = 0; i < k; ++i)
    for (int h : H) coset_of[group->mul(reps[i], h)] = i;

  BlockShape shape(std::vector<int>(k, m));
  std::map<int, Automorphism> gens;
  for (size_t j = 0; j < st.factors().size(); ++j) {
    std::vector<int> tuple(st.factors().size(), 0);
    tuple[j] = 1;
    int g = st.index_of(tuple);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = coset_of[group->mul(g, reps[i])];
    Mat v = character_diagonal(st, kappa, g);
    std::vector<Mat> unitaries(k, v);
    gens.emplace(g, Automorphism(shape, std::move(perm), std::move(unitaries)));
  }
  return GroupAction::from_generators(group, shape, gens);
}

GroupAction generate_inner(std::shared_ptr<const FiniteGroup> group, Rng& rng) {
  const auto& factors = group->abelian()->factors();
  bool product_group = factors.size() > 1;
  if (product_group && rng.uniform() < 0.4) return weyl_pair_action(group, rng);
  int n = product_group ? rng.uniform_int(3, 4) : rng.uniform_int(2, 4);
  Mat w = haar_unitary(n, rng);
  return character_action_faithful(group, n, w, rng);
}

GroupAction generate_gauge(std::shared_ptr<const FiniteGroup> group, Rng& rng) {
  const auto& factors = group->abelian()->factors();
  int n = factors.size() > 1 ? rng.uniform_int(3, 4) : rng.uniform_int(2, 4);
  return character_action_faithful(group, n, Mat::Identity(n, n), rng);
}

GroupAction generate_block_permutation(std::shared_ptr<const FiniteGroup> group, Rng& rng) {
  int order = group->order();
  int max_m = int(std::sqrt(24.0 / order));
  int m = rng.uniform_int(1, std::max(1, max_m));
  std::vector<int> kappa(m, 0);  // untwisted regular translation
  GroupAction action = coset_translation_action(group, {0}, m, kappa);
  if (rng.uniform() < 0.5) action = action.conjugate(random_inner(action.shape(), rng));
  return action;
}

GroupAction generate_mixed(std::shared_ptr<const FiniteGroup> group, Rng& rng) {
  const AbelianStructure& st = *group->abelian();
  auto subgroups = group->all_subgroups();
  // feasible (H, m) pairs: blocks of size m over the cosets, faithful needs
  // m >= 2 as soon as H is nontrivial
  std::vector<std::pair<std::vector<int>, int>> feasible;
  for (const auto& H : subgroups) {
    int k = group->order() / int(H.size());
    for (int m = (H.size() > 1 ? 2 : 1); m * m * k <= 24 && m <= 4; ++m)
      feasible.push_back({H, m});
  }
  std::sort(feasible.begin(), feasible.end());
  auto [H, m] = feasible[rng.uniform_int(0, int(feasible.size()) - 1)];

  std::optional<GroupAction> found;
  for (int attempt = 0; attempt < 64 && !found; ++attempt) {
    auto kappa = sample_characters(st, m, rng);
    GroupAction candidate = coset_translation_action(group, H, m, kappa);
    if (candidate.is_faithful()) found = std::move(candidate);
  }
  if (!found) {
    GroupAction fallback = coset_translation_action(group, H, m, canonical_characters(st, m));
    if (fallback.is_faithful())
      found = std::move(fallback);
    else
      found = coset_translation_action(group, {0}, 1, std::vector<int>{0});
  }
  GroupAction action = std::move(*found);
  if (rng.uniform() < 0.5) action = action.conjugate(random_inner(action.shape(), rng));
  return action;
}

}  // namespace

std::vector<SystemDescriptor> generate_examples(Family family, std::uint64_t seed, int count) {
  std::vector<SystemDescriptor> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng(mix_seed(mix_seed(seed, std::uint64_t(family) + 1), std::uint64_t(i)));
    auto group = make_group(group_pool()[i % group_pool().size()]);
    GroupAction action = [&] {
      switch (family) {
        case Family::inner: return generate_inner(group, rng);
        case Family::block_permutation: return generate_block_permutation(group, rng);
        case Family::gauge: return generate_gauge(group, rng);
        case Family::mixed: return generate_mixed(group, rng);
      }
      throw Error("unknown family");
    }();
    action.validate();
    out.push_back(SystemDescriptor::from_action(action));
  }
  return out;
}

}  // namespace cstar::harness
