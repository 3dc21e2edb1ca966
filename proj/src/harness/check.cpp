#include "cstar/harness/check.hpp"

#include <algorithm>
#include <sstream>

namespace cstar::harness {

namespace {

json spectrum_json(const SpectrumSet& sp) { return json(sp.members); }

void require_abelian_hypothesis(const GroupAction& action) {
  if (!action.group().abelian().has_value())
    throw HypothesisError("hypothesis violated: G is not abelian");
}

void require_faithful(const GroupAction& action, const Tolerance& tol) {
  if (!action.is_faithful(tol))
    throw HypothesisError("hypothesis violated: action is not faithful");
}

void require_G_prime(const GroupAction& action) {
  if (!action.is_G_prime())
    throw HypothesisError("hypothesis violated: A is not G-prime");
}

void require_prime_algebra(const GroupAction& action) {
  if (action.shape().blocks() != 1)
    throw HypothesisError("hypothesis violated: A is not prime");
}

bool all_equal(const std::vector<std::pair<std::string, bool>>& conditions) {
  for (const auto& [name, value] : conditions)
    if (value != conditions.front().second) return false;
  return true;
}

// d) of Theorem 9 and a) of Theorem 14 / Proposition 13: no nontrivial
// alpha_t carries a unitary witness inside `within`
bool no_implementing_unitary(const GroupAction& action, const Subspace& within,
                             const Tolerance& tol, json* witnesses) {
  bool none = true;
  for (int t = 0; t < action.group().order(); ++t) {
    if (t == action.group().identity()) continue;
    IntertwinerResult r = implementing_unitaries(action.alpha(t), within, tol);
    if (!r.witness && !r.conclusive) throw Error("witness search inconclusive");
    if (r.witness) {
      none = false;
      if (witnesses) (*witnesses)[std::to_string(t)] = element_to_json(*r.witness, 12);
    }
  }
  return none;
}

}  // namespace

json VerdictReport::to_json() const {
  json j;
  j["theorem"] = theorem;
  json conds = json::object();
  for (const auto& [name, value] : conditions) conds[name] = value;
  j["conditions"] = conds;
  j["consistent"] = consistent;
  j["vacuous"] = vacuous;
  j["falsification"] = falsification;
  j["aux_flag"] = aux_flag;
  j["details"] = details;
  j["tolerance"] = tolerance;
  j["seed"] = seed;
  return j;
}

std::string VerdictReport::to_text() const {
  std::ostringstream out;
  out << "theorem " << theorem << ": "
      << (ok() ? "CONSISTENT" : falsification ? "FALSIFICATION" : "INCONSISTENT");
  if (vacuous) out << " (vacuous)";
  out << "\n";
  for (const auto& [name, value] : conditions)
    out << "  " << name << ": " << (value ? "true" : "false") << "\n";
  if (aux_flag) out << "  auxiliary cross-check disagreed\n";
  for (const auto& [key, value] : details.items())
    if (value.is_primitive()) out << "  " << key << " = " << value.dump() << "\n";
  return out.str();
}

VerdictReport check_theorem9(const GroupAction& action, const Tolerance& tol) {
  require_abelian_hypothesis(action);
  require_faithful(action, tol);
  require_G_prime(action);

  VerdictReport report;
  report.theorem = "9";
  report.tolerance = tol.epsilon;
  report.vacuous = action.group().order() == 1;

  SpectrumSet sp = arveson_spectrum(action, tol);
  SpectrumSet gamma = connes_spectrum(action, tol);
  bool a = sp == gamma;

  Subspace fixed = action.fixed_point_algebra(tol);
  Wedderburn wd_fixed = wedderburn_decompose(fixed, tol);
  bool b = wd_fixed.shape.blocks() == 1;

  Subspace center = center_of(fixed, tol);
  bool c = center.dim() == 1;

  json witnesses = json::object();
  bool d = no_implementing_unitary(action, fixed, tol, &witnesses);

  report.conditions = {{"a_sp_equals_gamma", a},
                       {"b_fixed_algebra_prime", b},
                       {"c_fixed_center_trivial", c},
                       {"d_no_unitary_in_fixed_algebra", d}};
  report.consistent = all_equal(report.conditions);

  // cross-reference: primeness of A^alpha and of the crossed product agree
  CrossedProduct cp(action, tol);
  bool cp_prime = cp.structure().blocks() == 1;
  report.aux_flag = (b != cp_prime);

  report.details["arveson_spectrum"] = spectrum_json(sp);
  report.details["connes_spectrum"] = spectrum_json(gamma);
  report.details["dim_algebra"] = action.shape().dim();
  report.details["dim_fixed_algebra"] = fixed.dim();
  report.details["dim_fixed_center"] = center.dim();
  report.details["fixed_algebra_shape"] = wd_fixed.shape.dims;
  report.details["crossed_product_shape"] = cp.structure().dims;
  report.details["crossed_product_prime"] = cp_prime;
  report.details["witnesses_in_fixed_algebra"] = witnesses;
  return report;
}

VerdictReport check_theorem11(const GroupAction& action, const Tolerance& tol) {
  require_prime_algebra(action);
  require_faithful(action, tol);

  VerdictReport report;
  report.theorem = "11";
  report.tolerance = tol.epsilon;
  report.vacuous = action.group().order() == 1;

  bool warned = false;
  bool properly = is_properly_outer(action, tol, &warned);
  CrossedProduct cp(action, tol);
  Subspace rel = cp.relative_commutant_of_base();
  bool strictly = rel.dim() == 1;

  report.conditions = {{"properly_outer", properly}, {"strictly_outer", strictly}};
  report.consistent = properly == strictly;
  report.details["relative_commutant_dim"] = rel.dim();
  report.details["crossed_product_shape"] = cp.structure().dims;
  return report;
}

VerdictReport check_prop13(const GroupAction& action, const Tolerance& tol) {
  require_prime_algebra(action);
  require_abelian_hypothesis(action);
  require_faithful(action, tol);

  VerdictReport report;
  report.theorem = "p13";
  report.tolerance = tol.epsilon;
  report.vacuous = action.group().order() == 1;

  Subspace fixed = action.fixed_point_algebra(tol);
  Subspace rel = commutant(fixed, Subspace::full(action.shape()), tol);
  bool irreducible = rel.dim() == 1;

  json witnesses = json::object();
  bool outer = no_implementing_unitary(action, Subspace::full(action.shape()), tol, &witnesses);

  report.conditions = {{"fixed_commutant_trivial", irreducible},
                       {"all_nontrivial_properly_outer", outer}};
  report.consistent = irreducible == outer;
  report.details["fixed_commutant_dim"] = rel.dim();
  report.details["witnesses"] = witnesses;
  return report;
}

VerdictReport check_theorem14(const GroupAction& action, const Tolerance& tol) {
  require_prime_algebra(action);
  require_abelian_hypothesis(action);
  require_faithful(action, tol);

  VerdictReport report;
  report.theorem = "14";
  report.tolerance = tol.epsilon;
  report.vacuous = action.group().order() == 1;

  json witnesses = json::object();
  bool a = no_implementing_unitary(action, Subspace::full(action.shape()), tol, &witnesses);

  Subspace fixed = action.fixed_point_algebra(tol);
  Subspace rel = commutant(fixed, Subspace::full(action.shape()), tol);
  bool b = rel.dim() == 1;

  CrossedProduct cp(action, tol);
  Subspace cp_rel = cp.relative_commutant_of_base();
  bool c = cp_rel.dim() == 1;

  bool fixed_prime = is_prime(fixed, tol);
  GroupAction dual = cp.dual_action();
  json dual_witnesses = json::object();
  bool dual_outer =
      no_implementing_unitary(dual, Subspace::full(cp.structure()), tol, &dual_witnesses);
  bool d = fixed_prime && dual_outer;

  report.conditions = {{"a_all_properly_outer", a},
                       {"b_fixed_commutant_trivial", b},
                       {"c_strictly_outer", c},
                       {"d_fixed_prime_and_dual_outer", d}};
  report.consistent = all_equal(report.conditions);

  bool cp_prime = cp.structure().blocks() == 1;
  report.aux_flag = (fixed_prime != cp_prime);

  report.details["fixed_commutant_dim"] = rel.dim();
  report.details["relative_commutant_dim"] = cp_rel.dim();
  report.details["fixed_algebra_prime"] = fixed_prime;
  report.details["dual_properly_outer"] = dual_outer;
  report.details["crossed_product_shape"] = cp.structure().dims;
  report.details["crossed_product_prime"] = cp_prime;
  report.details["witnesses"] = witnesses;
  report.details["dual_witnesses"] = dual_witnesses;
  return report;
}

VerdictReport check_prop7(const GroupAction& action, int t0, const Tolerance& tol) {
  VerdictReport report;
  report.theorem = "p7";
  report.tolerance = tol.epsilon;

  ConnesKernelWitness w = implementing_unitary_for_connes_kernel(action, t0, tol);
  double residual_tol = 10.0 * tol.epsilon;

  bool found = w.unitary.has_value();
  bool residuals_ok = found && w.intertwining_residual <= residual_tol &&
                      w.invariance_residual <= residual_tol;
  report.falsification = !found;
  report.conditions = {{"witness_found", found}, {"residuals_within_tolerance", residuals_ok}};
  report.consistent = found && residuals_ok;

  report.details["t0"] = t0;
  report.details["connes_spectrum"] = spectrum_json(w.connes);
  report.details["intertwining_residual"] = found ? w.intertwining_residual : -1.0;
  report.details["invariance_residual"] = found ? w.invariance_residual : -1.0;
  if (found) report.details["unitary"] = element_to_json(*w.unitary, 12);
  return report;
}

std::vector<int> connes_annihilating_elements(const GroupAction& action, const Tolerance& tol) {
  const AbelianStructure& st = require_abelian(action);
  SpectrumSet gamma = connes_spectrum(action, tol);
  std::vector<int> out;
  for (int t = 0; t < action.group().order(); ++t) {
    bool annihilates = true;
    for (int g : gamma.members)
      if (!st.pairing_is_one(t, g)) {
        annihilates = false;
        break;
      }
    if (annihilates) out.push_back(t);
  }
  return out;
}

VerdictReport spectral_facts_suite(const GroupAction& action, const Tolerance& tol) {
  const AbelianStructure& st = require_abelian(action);
  const int order = action.group().order();
  const double resid_tol = 100.0 * tol.epsilon;

  VerdictReport report;
  report.theorem = "facts";
  report.tolerance = tol.epsilon;

  auto units = matrix_unit_basis(action.shape());
  std::vector<Subspace> subspaces;
  for (int gamma = 0; gamma < order; ++gamma)
    subspaces.push_back(spectral_subspace(action, gamma, tol));
  SpectrumSet sp;
  for (int gamma = 0; gamma < order; ++gamma)
    if (subspaces[gamma].dim() > 0) sp.members.push_back(gamma);

  // fact 1: the spectral subspaces decompose A; the averaged projections are
  // mutually orthogonal and sum to the identity map
  int total = 0;
  for (const auto& s : subspaces) total += s.dim();
  bool fact1 = total == action.shape().dim();
  for (const auto& b : units) {
    AlgebraElement sum(action.shape());
    for (int gamma = 0; gamma < order && fact1; ++gamma) {
      AlgebraElement pg = spectral_projection_apply(action, gamma, b);
      sum = sum + pg;
      for (int other = 0; other < order; ++other) {
        if (other == gamma) continue;
        if (spectral_projection_apply(action, other, pg).frobenius() > resid_tol) fact1 = false;
      }
    }
    if ((sum - b).frobenius() > resid_tol) fact1 = false;
    if (!fact1) break;
  }

  // fact 2: A_{g1} A_{g2} inside A_{g1+g2}
  bool fact2 = true;
  for (int g1 : sp.members)
    for (int g2 : sp.members) {
      int g12 = st.add(g1, g2);
      for (int i = 0; i < subspaces[g1].dim() && fact2; ++i)
        for (int j = 0; j < subspaces[g2].dim(); ++j) {
          AlgebraElement prod = subspaces[g1].basis_element(i) * subspaces[g2].basis_element(j);
          double miss = subspaces[g12].dim() > 0 ? subspaces[g12].membership_residual(prod)
                                                 : prod.frobenius();
          if (prod.frobenius() > resid_tol && miss > resid_tol) {
            fact2 = false;
            break;
          }
        }
    }

  // fact 3: A_g A_g^* and A_g^* A_g are ideals of the fixed-point algebra
  Subspace fixed = action.fixed_point_algebra(tol);
  bool fact3 = true;
  for (int g : sp.members) {
    for (int swap = 0; swap < 2 && fact3; ++swap) {
      std::vector<AlgebraElement> prods;
      for (int i = 0; i < subspaces[g].dim(); ++i)
        for (int j = 0; j < subspaces[g].dim(); ++j) {
          AlgebraElement x = subspaces[g].basis_element(i);
          AlgebraElement y = subspaces[g].basis_element(j).adjoint();
          prods.push_back(swap ? y * x : x * y);
        }
      Subspace ideal = Subspace::span(action.shape(), prods, tol);
      for (int i = 0; i < ideal.dim() && fact3; ++i)
        for (int f = 0; f < fixed.dim(); ++f) {
          AlgebraElement z = ideal.basis_element(i);
          AlgebraElement u = fixed.basis_element(f);
          if (ideal.membership_residual(u * z) > resid_tol ||
              ideal.membership_residual(z * u) > resid_tol) {
            fact3 = false;
            break;
          }
        }
    }
    if (!fact3) break;
  }

  bool fixed_prime = is_prime(fixed, tol);
  bool faithful = action.is_faithful(tol);

  report.conditions = {{"fact1_decomposition", fact1},
                       {"fact2_graded_products", fact2},
                       {"fact3_fixed_ideals", fact3}};
  json skipped = json::object();

  // fact 4: Sp is a subgroup when the fixed-point algebra is prime
  if (fixed_prime)
    report.conditions.push_back({"fact4_sp_subgroup", sp.is_subgroup(st)});
  else
    skipped["fact4_sp_subgroup"] = "A^alpha is not prime";

  // fact 5: Sp is everything for faithful actions with prime fixed algebra
  if (fixed_prime && faithful)
    report.conditions.push_back({"fact5_full_spectrum", int(sp.members.size()) == order});
  else
    skipped["fact5_full_spectrum"] =
        fixed_prime ? "action is not faithful" : "A^alpha is not prime";

  SpectrumSet gamma = connes_spectrum(action, tol);
  report.conditions.push_back({"gamma_subset_of_sp", gamma.subset_of(sp)});
  report.conditions.push_back({"gamma_subgroup", gamma.is_subgroup(st)});

  report.consistent = true;
  for (const auto& [name, value] : report.conditions) report.consistent &= value;

  report.details["arveson_spectrum"] = spectrum_json(sp);
  report.details["connes_spectrum"] = spectrum_json(gamma);
  report.details["fixed_algebra_prime"] = fixed_prime;
  report.details["faithful"] = faithful;
  report.details["skipped"] = skipped;
  return report;
}

VerdictReport run_named_check(const std::string& theorem, const GroupAction& action,
                              std::optional<int> t0, const Tolerance& tol) {
  if (theorem == "9") return check_theorem9(action, tol);
  if (theorem == "11") return check_theorem11(action, tol);
  if (theorem == "14") return check_theorem14(action, tol);
  if (theorem == "p13") return check_prop13(action, tol);
  if (theorem == "facts") return spectral_facts_suite(action, tol);
  if (theorem == "p7") {
    if (t0) return check_prop7(action, *t0, tol);
    // with no t0 given, run every admissible one and merge
    VerdictReport merged;
    merged.theorem = "p7";
    merged.tolerance = tol.epsilon;
    json runs = json::array();
    bool all_ok = true;
    for (int t : connes_annihilating_elements(action, tol)) {
      VerdictReport r = check_prop7(action, t, tol);
      all_ok = all_ok && r.ok();
      merged.falsification |= r.falsification;
      runs.push_back(r.to_json());
    }
    merged.conditions = {{"all_admissible_t0_pass", all_ok}};
    merged.consistent = all_ok;
    merged.details["runs"] = runs;
    return merged;
  }
  throw InputError("unknown theorem: " + theorem);
}

SuiteResult run_suite(const SuiteOptions& opts) {
  SuiteResult result;
  json instances = json::array();
  int checks = 0, inconsistencies = 0, falsifications = 0, errors = 0;

  for (Family family : all_families()) {
    auto descriptors = generate_examples(family, opts.seed, opts.count);
    for (size_t index = 0; index < descriptors.size(); ++index) {
      json entry;
      entry["family"] = family_name(family);
      entry["index"] = int(index);
      entry["descriptor"] = descriptors[index].to_json();
      json reports = json::array();
      try {
        GroupAction action = descriptors[index].build(opts.tol);
        std::uint64_t instance_seed =
            mix_seed(mix_seed(opts.seed, std::uint64_t(family) + 1), index);

        std::vector<VerdictReport> run;
        run.push_back(spectral_facts_suite(action, opts.tol));
        run.push_back(check_theorem9(action, opts.tol));
        for (int t0 : connes_annihilating_elements(action, opts.tol))
          run.push_back(check_prop7(action, t0, opts.tol));
        if (action.shape().blocks() == 1) {
          run.push_back(check_theorem11(action, opts.tol));
          run.push_back(check_prop13(action, opts.tol));
          run.push_back(check_theorem14(action, opts.tol));
        }
        for (auto& r : run) {
          r.seed = instance_seed;
          ++checks;
          if (!r.consistent || r.aux_flag) ++inconsistencies;
          if (r.falsification) ++falsifications;
          reports.push_back(r.to_json());
        }
      } catch (const Error& e) {
        ++errors;
        entry["error"] = e.what();
      }
      entry["reports"] = reports;
      instances.push_back(std::move(entry));
    }
  }

  json summary;
  summary["instances"] = int(instances.size());
  summary["checks"] = checks;
  summary["inconsistencies"] = inconsistencies;
  summary["falsifications"] = falsifications;
  summary["errors"] = errors;

  result.report["seed"] = opts.seed;
  result.report["count_per_family"] = opts.count;
  result.report["tolerance"] = opts.tol.epsilon;
  result.report["summary"] = summary;
  result.report["instances"] = instances;
  result.exit_code = (inconsistencies || falsifications || errors) ? 2 : 0;
  return result;
}

}  // namespace cstar::harness
