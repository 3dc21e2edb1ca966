#include "cstar/algebra_ops.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "cstar/numeric.hpp"

namespace cstar {

Subspace IdealDescriptor::subspace(const BlockShape& shape, const Tolerance& tol) const {
  std::vector<AlgebraElement> units;
  for (int b : block_subset) {
    if (b < 0 || b >= shape.blocks()) throw InputError("ideal block index out of range");
    for (int r = 0; r < shape.dims[b]; ++r)
      for (int c = 0; c < shape.dims[b]; ++c)
        units.push_back(AlgebraElement::matrix_unit(shape, b, r, c));
  }
  return Subspace::span(shape, units, tol);
}

namespace {

// map matrix of x -> x s - s x restricted to coefficients over `basis`
Mat commutator_map(const std::vector<AlgebraElement>& basis, const AlgebraElement& s) {
  Mat m(s.shape().dim(), basis.size());
  for (size_t l = 0; l < basis.size(); ++l)
    m.col(l) = (basis[l] * s - s * basis[l]).vectorize();
  return m;
}

Subspace commutant_of_set(const std::vector<AlgebraElement>& set, const Subspace& within,
                          const Tolerance& tol) {
  auto basis = within.basis_elements();
  num::KernelAccumulator acc(within.dim());
  for (const auto& s : set) acc.add(commutator_map(basis, s));
  Mat kernel = acc.kernel(tol);
  Mat cols(within.shape().dim(), kernel.cols());
  for (int j = 0; j < kernel.cols(); ++j)
    cols.col(j) = within.basis_matrix() * kernel.col(j);
  return Subspace::span_vectors(within.shape(), cols, tol);
}

}  // namespace

Subspace commutant(const Subspace& S, const Subspace& within, const Tolerance& tol) {
  if (S.shape() != within.shape()) throw Error("incompatible shapes");
  return commutant_of_set(S.basis_elements(), within, tol);
}

Subspace center_of(const Subspace& S, const Tolerance& tol) {
  if (!S.contains_identity(tol) || !S.is_adjoint_closed(tol) ||
      !S.is_multiplicatively_closed(tol))
    throw Error("not a subalgebra");
  return commutant(S, S, tol);
}

AlgebraElement generic_element(const Subspace& S, Rng& rng) {
  Vec c(S.dim());
  for (int i = 0; i < c.size(); ++i) c(i) = rng.cgaussian();
  return S.from_coefficients(c);
}

AlgebraElement generic_self_adjoint(const Subspace& S, Rng& rng) {
  AlgebraElement x = generic_element(S, rng);
  return (x + x.adjoint()) * Cplx(0.5, 0.0);
}

AlgebraElement Wedderburn::realize(const AlgebraElement& s) const {
  Mat amb = s.ambient();
  AlgebraElement out(shape);
  for (size_t j = 0; j < blocks.size(); ++j) {
    const auto& b = blocks[j];
    Mat v1 = b.isometry.leftCols(b.m);
    out.block(int(j)) = v1.adjoint() * amb * v1;
  }
  return out;
}

AlgebraElement Wedderburn::embed(const AlgebraElement& x) const {
  if (x.shape() != shape) throw Error("incompatible shapes");
  int N = base_shape.ambient_dim();
  Mat amb = Mat::Zero(N, N);
  for (size_t j = 0; j < blocks.size(); ++j) {
    const auto& b = blocks[j];
    Mat mid = Mat::Zero(b.m * b.mult, b.m * b.mult);
    for (int c = 0; c < b.mult; ++c)
      mid.block(c * b.m, c * b.m, b.m, b.m) = x.block(int(j));
    amb += b.isometry * mid * b.isometry.adjoint();
  }
  return AlgebraElement::from_ambient(base_shape, amb);
}

namespace {

struct AmbientEig {
  double value;
  int block;
  Vec vector;  // within the block
};

// all blockwise eigenpairs of a self-adjoint element, sorted by eigenvalue
std::vector<AmbientEig> ambient_eigensystem(const AlgebraElement& z) {
  std::vector<AmbientEig> eigs;
  for (int i = 0; i < z.shape().blocks(); ++i) {
    Eigen::SelfAdjointEigenSolver<Mat> es(z.block(i));
    for (int j = 0; j < es.eigenvalues().size(); ++j)
      eigs.push_back({es.eigenvalues()(j), i, es.eigenvectors().col(j)});
  }
  std::sort(eigs.begin(), eigs.end(),
            [](const AmbientEig& a, const AmbientEig& b) { return a.value < b.value; });
  return eigs;
}

double cluster_gap(const std::vector<AmbientEig>& eigs) {
  double m = 1.0;
  for (const auto& e : eigs) m = std::max(m, std::abs(e.value));
  return 1e-6 * m;
}

// spectral projections of z grouped by eigenvalue cluster
std::vector<AlgebraElement> spectral_projections(const AlgebraElement& z) {
  auto eigs = ambient_eigensystem(z);
  double gap = cluster_gap(eigs);
  std::vector<AlgebraElement> projections;
  size_t i = 0;
  while (i < eigs.size()) {
    size_t j = i + 1;
    while (j < eigs.size() && eigs[j].value - eigs[j - 1].value <= gap) ++j;
    AlgebraElement p(z.shape());
    for (size_t t = i; t < j; ++t)
      p.block(eigs[t].block) += eigs[t].vector * eigs[t].vector.adjoint();
    projections.push_back(p);
    i = j;
  }
  return projections;
}

// Generators known to generate span(S) as an algebra, verified downstream.
std::vector<AlgebraElement> working_generators(const Subspace& S,
                                               const WedderburnOptions& opts, int extra,
                                               Rng& rng) {
  if (S.dim() <= 64 && extra == 0) return S.basis_elements();
  std::vector<AlgebraElement> gens = opts.generator_hint;
  gens.push_back(generic_self_adjoint(S, rng));
  gens.push_back(generic_element(S, rng));
  for (int i = 0; i < extra; ++i) gens.push_back(generic_element(S, rng));
  return gens;
}

// Verified center of S: candidates from a generator commutant, each checked
// against the whole basis, with the generator set grown on failure.
Subspace verified_center(const Subspace& S, const Tolerance& tol,
                         const WedderburnOptions& opts) {
  Rng rng(0xce27e6u);
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto gens = working_generators(S, opts, attempt, rng);
    Subspace z = commutant_of_set(gens, S, tol);
    bool ok = true;
    auto basis = S.basis_elements();
    for (int j = 0; j < z.dim() && ok; ++j) {
      AlgebraElement c = z.basis_element(j);
      for (const auto& b : basis)
        if (!(c * b - b * c).approx_zero(Tolerance{tol.epsilon * 16})) {
          ok = false;
          break;
        }
    }
    if (ok) return z;
  }
  throw Error("decomposition unresolved");
}

struct CornerData {
  int m = 0, mult = 0;
  Mat isometry;
  AlgebraElement minimal_projection;
};

// Matrix-unit construction inside the corner pSp of a minimal central
// projection p: p S p ~ M_m with multiplicity r/m in the ambient space.
std::optional<CornerData> analyze_corner(const Subspace& S, const AlgebraElement& p,
                                         const Tolerance& tol, Rng& rng) {
  const BlockShape& shape = S.shape();
  Mat pa = p.ambient();
  double trace = pa.trace().real();
  int r = int(std::lround(trace));
  if (r < 1 || std::abs(trace - r) > 1e-6) return std::nullopt;

  Eigen::SelfAdjointEigenSolver<Mat> pes(pa);
  Mat range = pes.eigenvectors().rightCols(r);  // ambient onb of range(p)
  if ((pes.eigenvalues().tail(r).array() < 0.5).any()) return std::nullopt;

  std::vector<AlgebraElement> compressed;
  for (const auto& b : S.basis_elements()) compressed.push_back(p * b * p);
  Subspace corner = Subspace::span(shape, compressed, tol);
  int m = int(std::lround(std::sqrt(double(corner.dim()))));
  if (m * m != corner.dim() || r % m != 0) return std::nullopt;
  int mult = r / m;

  for (int inner = 0; inner < 6; ++inner) {
    AlgebraElement t = generic_self_adjoint(corner, rng);
    Mat tc = range.adjoint() * t.ambient() * range;
    tc = (tc + Mat(tc.adjoint())) * 0.5;
    Eigen::SelfAdjointEigenSolver<Mat> tes(tc);
    RVec vals = tes.eigenvalues();
    double gap = 1e-6 * std::max(1.0, vals.cwiseAbs().maxCoeff());
    auto clusters = num::cluster_values(vals, gap);
    if (int(clusters.size()) != m) continue;
    bool even = true;
    for (const auto& cl : clusters) even = even && int(cl.size()) == mult;
    if (!even) continue;

    // spectral projections of t within the corner, as algebra elements
    std::vector<AlgebraElement> q(m, AlgebraElement(shape));
    std::vector<Mat> q_range(m);
    for (int a = 0; a < m; ++a) {
      Mat w(r, mult);
      for (int c = 0; c < mult; ++c) w.col(c) = tes.eigenvectors().col(clusters[a][c]);
      q_range[a] = range * w;  // ambient N x mult
      q[a] = AlgebraElement::from_ambient(shape, q_range[a] * q_range[a].adjoint());
    }

    // partial isometries w_a with w_a^* w_a = q_0, w_a w_a^* = q_a
    std::vector<AlgebraElement> w(m, AlgebraElement(shape));
    w[0] = q[0];
    bool ok = true;
    for (int a = 1; a < m && ok; ++a) {
      std::vector<AlgebraElement> candidates;
      for (int j = 0; j < corner.dim(); ++j)
        candidates.push_back(q[a] * corner.basis_element(j) * q[0]);
      Subspace line = Subspace::span(shape, candidates, tol);
      if (line.dim() != 1) {
        ok = false;
        break;
      }
      AlgebraElement x = line.basis_element(0);
      AlgebraElement gram = x.adjoint() * x;
      double scale = gram.ambient().trace().real() / mult;
      if (scale <= 0) {
        ok = false;
        break;
      }
      w[a] = x * Cplx(1.0 / std::sqrt(scale), 0.0);
      if (!(w[a].adjoint() * w[a]).approx_equal(q[0], Tolerance{1e-7}) ||
          !(w[a] * w[a].adjoint()).approx_equal(q[a], Tolerance{1e-7}))
        ok = false;
    }
    if (!ok) continue;

    Mat isometry(shape.ambient_dim(), m * mult);
    for (int c = 0; c < mult; ++c) {
      Vec u0 = q_range[0].col(c);
      for (int a = 0; a < m; ++a)
        isometry.col(a + m * c) = a == 0 ? u0 : Vec(w[a].ambient() * u0);
    }
    Mat gram = isometry.adjoint() * isometry;
    if ((gram - Mat::Identity(m * mult, m * mult)).norm() > 1e-7 * m * mult) continue;

    CornerData data;
    data.m = m;
    data.mult = mult;
    data.isometry = isometry;
    data.minimal_projection = q[0];
    return data;
  }
  return std::nullopt;
}

bool verify_realization(const Subspace& S, const Wedderburn& wd, const Tolerance& tol,
                        Rng& rng) {
  int trials = std::min(S.dim(), 6);
  for (int t = 0; t < trials; ++t) {
    AlgebraElement a = generic_element(S, rng);
    AlgebraElement b = generic_element(S, rng);
    AlgebraElement ra = wd.realize(a), rb = wd.realize(b);
    if (!wd.realize(a * b).approx_equal(ra * rb, Tolerance{1e-7})) return false;
    if (!wd.realize(a.adjoint()).approx_equal(ra.adjoint(), Tolerance{1e-7})) return false;
    AlgebraElement back = wd.embed(ra);
    if (!back.approx_equal(a, Tolerance{1e-7})) return false;
  }
  return true;
}

}  // namespace

Wedderburn wedderburn_decompose(const Subspace& S, const Tolerance& tol,
                                const WedderburnOptions& opts) {
  const BlockShape& shape = S.shape();
  if (S.dim() < 1) throw Error("not a subalgebra");
  if (!S.contains_identity(tol) || !S.is_adjoint_closed(tol))
    throw Error("not a subalgebra");
  if (opts.verify_closure && !S.is_multiplicatively_closed(tol))
    throw Error("not a subalgebra");

  Subspace center = verified_center(S, tol, opts);
  const int n_blocks = center.dim();

  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng rng(mix_seed(0x3edde2b42ull, attempt));
    AlgebraElement z = generic_self_adjoint(center, rng);
    auto projections = spectral_projections(z);
    if (int(projections.size()) != n_blocks) continue;

    bool ok = true;
    AlgebraElement sum(shape);
    for (const auto& p : projections) {
      if (!p.is_projection(Tolerance{1e-7}) || S.membership_residual(p) > 1e-7) ok = false;
      sum = sum + p;
    }
    if (!sum.approx_equal(AlgebraElement::identity(shape), Tolerance{1e-7})) ok = false;
    if (!ok) continue;

    Wedderburn wd;
    wd.base_shape = shape;
    for (const auto& p : projections) {
      auto corner = analyze_corner(S, p, tol, rng);
      if (!corner) {
        ok = false;
        break;
      }
      WedderburnBlock blk;
      blk.m = corner->m;
      blk.mult = corner->mult;
      blk.central_projection = p;
      blk.minimal_projection = corner->minimal_projection;
      blk.isometry = corner->isometry;
      wd.blocks.push_back(std::move(blk));
    }
    if (!ok) continue;

    std::stable_sort(wd.blocks.begin(), wd.blocks.end(),
                     [](const WedderburnBlock& a, const WedderburnBlock& b) { return a.m > b.m; });
    std::vector<int> dims;
    int total = 0;
    for (const auto& b : wd.blocks) {
      dims.push_back(b.m);
      total += b.m * b.m;
    }
    if (total != S.dim()) continue;
    wd.shape = BlockShape(dims);

    if (!verify_realization(S, wd, tol, rng)) continue;
    return wd;
  }
  throw Error("decomposition unresolved");
}

bool is_prime(const Subspace& S, const Tolerance& tol, const WedderburnOptions& opts) {
  return wedderburn_decompose(S, tol, opts).shape.blocks() == 1;
}

}  // namespace cstar
