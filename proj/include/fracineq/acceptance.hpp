#pragma once

#include <string>
#include <vector>

#include "fracineq/harness.hpp"

namespace fracineq {

/// The reference case list run on FunctionFamily::standard(): every verifier
/// at least once, Theorem 2 and HLS with constant and variable exponents, and
/// Theorem 5 with A(t) = t^2 next to Theorem 2 with p = 2.
std::vector<CaseSpec> standard_cases();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Deterministic summary of the measured quantities (no timings).
  std::string detail;
  double seconds = 0.0;
};

CriterionResult check_spectral_identities();
CriterionResult check_riemann_liouville();
CriterionResult check_luxemburg_engine();
CriterionResult check_orlicz_engine();
CriterionResult check_littlewood_paley();
CriterionResult check_dilation_homogeneity();
CriterionResult check_interpolation_lemma();
/// Also hands back the standard reports so callers can write them out.
CriterionResult check_theorem_verifiers(std::vector<InequalityReport>* reports = nullptr);
CriterionResult check_exponent_arithmetic();
CriterionResult check_determinism();

struct AcceptanceRun {
  std::vector<CriterionResult> criteria;
  std::vector<InequalityReport> standard_reports;
  bool all_pass() const;
};

/// Runs criteria 1-10 in order.
AcceptanceRun run_acceptance();

/// id,name,pass,detail; byte-stable across runs.
std::string criteria_to_csv(const std::vector<CriterionResult>& criteria);

}  // namespace fracineq
