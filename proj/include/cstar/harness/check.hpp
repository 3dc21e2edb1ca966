// Theorem checkers: each evaluates the sides of an equivalence through
// independent code paths and reports whether they agree, plus the spectral
// facts suite and the batch runner behind the `suite` subcommand.
#pragma once

#include <cstdint>

#include "cstar/harness/descriptor.hpp"
#include "cstar/harness/generate.hpp"
#include "cstar/outerness.hpp"

namespace cstar::harness {

struct VerdictReport {
  std::string theorem;
  std::vector<std::pair<std::string, bool>> conditions;
  bool consistent = true;
  bool vacuous = false;       // equivalence quantified over an empty set
  bool falsification = false; // a paper-guaranteed witness failed to appear
  bool aux_flag = false;      // auxiliary cross-check disagreed
  json details = json::object();
  double tolerance = 0.0;
  std::uint64_t seed = 0;

  bool ok() const { return consistent && !falsification && !aux_flag; }
  json to_json() const;
  std::string to_text() const;
};

/// Sp = Gamma, A^alpha prime, trivial center of A^alpha, and no alpha_t
/// implemented by a unitary of A^alpha, checked for mutual agreement.
/// Hypotheses: G finite abelian, action faithful, A G-prime.
VerdictReport check_theorem9(const GroupAction& action, const Tolerance& tol = {});

/// properly outer <=> strictly outer. Hypotheses: A prime, action faithful.
VerdictReport check_theorem11(const GroupAction& action, const Tolerance& tol = {});

/// four conditions: all alpha_g properly outer; trivial relative commutant
/// of A^alpha in A; trivial relative commutant of A in the crossed product;
/// A^alpha prime with properly outer dual action.
/// Hypotheses: A prime, G finite abelian, action faithful.
VerdictReport check_theorem14(const GroupAction& action, const Tolerance& tol = {});

/// trivial relative commutant of A^alpha in A <=> every alpha_t properly
/// outer. Hypotheses: A prime, G finite abelian, action faithful.
VerdictReport check_prop13(const GroupAction& action, const Tolerance& tol = {});

/// constructive fixed unitary for t0 annihilating the Connes spectrum; a
/// missing witness is flagged as a falsification.
VerdictReport check_prop7(const GroupAction& action, int t0, const Tolerance& tol = {});

/// the five standard facts about spectral subspaces, plus Gamma within Sp
/// and subgroup closure of Gamma; conditional facts are skipped with the
/// failing hypothesis recorded.
VerdictReport spectral_facts_suite(const GroupAction& action, const Tolerance& tol = {});

/// elements t with <t,gamma> = 1 for every gamma in the Connes spectrum
std::vector<int> connes_annihilating_elements(const GroupAction& action,
                                              const Tolerance& tol = {});

VerdictReport run_named_check(const std::string& theorem, const GroupAction& action,
                              std::optional<int> t0, const Tolerance& tol);

struct SuiteOptions {
  std::uint64_t seed = 7;
  int count = 50;  // instances per family
  Tolerance tol{};
};

struct SuiteResult {
  json report;
  int exit_code = 0;  // 0 clean, 2 on any inconsistency or falsification
};

SuiteResult run_suite(const SuiteOptions& opts);

}  // namespace cstar::harness
