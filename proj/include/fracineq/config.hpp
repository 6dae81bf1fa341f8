#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fracineq/harness.hpp"

namespace fracineq {

enum class OutputFormat { csv, json, both };

/// A declared run: grid, function family, cases and output settings.
///
/// JSON schema (unknown keys are rejected at every level):
///   domain:  {dimension, period, points}                 default {1, 16, 128}
///   family:  {kind: "standard", seed}
///          | {kind: "random_band_limited", seed, size, max_band}
///          | {kind: "custom", seed, generators: [generator...]}
///   generator: {type: "fourier_mode", k: [k0, k1]} | {type: "gaussian", sigma, center}
///          | {type: "smooth_bump", radius, center}
///          | {type: "random_band_limited", seed, max_band}
///          | {type: "sum", terms: [generator...]}; every generator takes an
///            optional "weight".
///   cases:   [{id, theorem, s, s1, beta, p, frak_p, young, profile}]
///            p is a number or an exponent object {type: constant|sinusoid|
///            two_phase|bump|table, ...}; young is {type: power|capped_power|
///            exp_type|table, ...}; profile is "heat", "littlewood_paley" or
///            {type: "heat_derivative", order}.
///   output:  {format: "csv"|"json"|"both", directory, basename}
///   refinement: bool (default true), jobs: int (default 1),
///   allow_inconclusive: bool (default false)
struct RunConfig {
  DomainSpec domain{1, 16.0, 128};
  FunctionFamily family = FunctionFamily::standard();
  std::vector<CaseSpec> cases;
  OutputFormat format = OutputFormat::csv;
  std::filesystem::path directory = ".";
  std::string basename = "report";
  bool refinement = true;
  unsigned jobs = 1;
  bool allow_inconclusive = false;

  /// Parses and validates, including every case's gates. Throws
  /// InvalidArgument (GateError for gate violations) on the first problem.
  static RunConfig parse(const std::string& json_text);
  static RunConfig load(const std::filesystem::path& path);

  /// FRACINEQ_OUTPUT_DIR and FRACINEQ_JOBS, when set, replace the configured values.
  void apply_environment();
};

struct RunResult {
  std::vector<InequalityReport> reports;
  std::vector<std::filesystem::path> files;
  /// 0 iff every case passes (inconclusive counts as failure unless allowed).
  int exit_code = 0;
};

RunResult execute(const RunConfig& config);

/// Case parsing shared with the acceptance suite: one JSON object as above.
CaseSpec parse_case(const std::string& json_object_text, const DomainSpec& domain);

}  // namespace fracineq
