#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracineq/exponent.hpp"
#include "fracineq/field.hpp"
#include "fracineq/generators.hpp"
#include "fracineq/maximal.hpp"
#include "fracineq/orlicz.hpp"

namespace fracineq {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Generators sampled on a shared grid; members are mean-projected.
class FunctionFamily {
 public:
  /// Throws if the generator list is empty.
  FunctionFamily(DomainSpec domain, std::vector<GeneratorSpec> generators, std::uint64_t seed = 0);

  /// 1-D, L = 16, N = 128: five Gaussians, five bumps, five single modes and
  /// five random band-limited fields seeded from `seed`.
  static FunctionFamily standard(std::uint64_t seed = 20240601, std::size_t points = 128);

  const DomainSpec& domain() const noexcept { return domain_; }
  const std::vector<GeneratorSpec>& generators() const noexcept { return generators_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// Same generators on the grid with twice the points per axis.
  FunctionFamily refined() const;
  std::vector<SampledField> members() const;

 private:
  DomainSpec domain_;
  std::vector<GeneratorSpec> generators_;
  std::uint64_t seed_;
};

/// Young function described by value, so cases can be copied and printed.
struct YoungSpec {
  std::string kind = "power";  ///< power | capped_power | exp_type | table
  double p = 2.0;
  double q = 2.0;
  double knee = 1.0;
  std::vector<double> knots;
  std::vector<double> densities;

  YoungFunction build() const;
  std::string describe() const;
};

enum class Theorem {
  modified_hedberg,     ///< theorem1
  sobolev_like,         ///< theorem2
  mixed_sobolev,        ///< theorem3
  mixed_hls,            ///< theorem4
  orlicz_sobolev,       ///< theorem5
  classical_hedberg,    ///< hedberg
  hls,                  ///< hls (constant or variable exponent)
  phi_maximal,          ///< phi_maximal
  maximal_boundedness,  ///< maximal
  young_oneil,          ///< young_oneil
  besov_equivalence,    ///< besov
};

std::string theorem_tag(Theorem t);
/// Throws InvalidArgument for an unknown tag.
Theorem theorem_from_tag(const std::string& tag);

/// One verification case. Unused fields keep their defaults.
struct CaseSpec {
  std::string case_id;
  Theorem theorem = Theorem::sobolev_like;
  double s = kNaN;
  double s1 = 0.0;
  double beta = kNaN;
  /// Constant exponent p for classical Hedberg, maximal boundedness and
  /// Young-O'Neil.
  double p = kNaN;
  double frak_p = kNaN;
  std::optional<ExponentSpec> exponent;
  std::optional<YoungSpec> young;
  SmoothProfile profile = SmoothProfile::heat();

  /// Admissibility gates on the given grid. Throws GateError naming the first
  /// violated condition.
  void validate(const DomainSpec& domain) const;
};

struct ParameterRecord {
  int n = 0;
  double s = kNaN;
  double s1 = kNaN;
  double beta = kNaN;
  double theta = kNaN;
  std::string p_desc;
  double frak_p = kNaN;
  std::string q_desc;
  std::string a_desc;
};

struct InequalityReport {
  std::string case_id;
  std::string theorem;
  ParameterRecord params;
  /// LHS and RHS where the base-grid C_fit is attained.
  double lhs_max = kNaN;
  double rhs_at_max = kNaN;
  double c_fit = kNaN;
  double c_fit_refined = kNaN;
  double refinement_ratio = kNaN;
  std::size_t skipped = 0;
  bool pass = false;
  bool inconclusive = false;
  /// Secondary measurements in insertion order.
  std::vector<std::pair<std::string, double>> extras;
  /// Error text when the case failed with an exception.
  std::string error;

  std::optional<double> extra(const std::string& key) const;
};

/// Ratio C(2N) / C(N) inside [1/2, 2] with both finite and positive.
bool refinement_stable(double c_fit, double c_fit_refined);

struct VerifyOptions {
  /// Also run on the refined family. Without it the ratio is NaN and pass
  /// only requires a finite C_fit.
  bool refinement = true;
};

InequalityReport verify_modified_hedberg(const FunctionFamily& family, double s, double s1, double beta,
                                         const VerifyOptions& opt = {});
InequalityReport verify_theorem2(const FunctionFamily& family, double s, double s1, double beta,
                                 const ExponentSpec& p, const VerifyOptions& opt = {});
InequalityReport verify_theorem3(const FunctionFamily& family, double s, const ExponentSpec& p,
                                 double frak_p, const VerifyOptions& opt = {});
InequalityReport verify_theorem4(const FunctionFamily& family, double s, const ExponentSpec& p,
                                 double frak_p, const VerifyOptions& opt = {});
InequalityReport verify_theorem5(const FunctionFamily& family, double s, double s1, double beta,
                                 const YoungSpec& a, const VerifyOptions& opt = {});
InequalityReport verify_classical_hedberg(const FunctionFamily& family, double s, double p,
                                          const VerifyOptions& opt = {});
InequalityReport verify_hls(const FunctionFamily& family, double s, const ExponentSpec& p,
                            const VerifyOptions& opt = {});
InequalityReport verify_phi_maximal_domination(const FunctionFamily& family, const SmoothProfile& profile,
                                               const VerifyOptions& opt = {});
InequalityReport verify_maximal_boundedness(const FunctionFamily& family, double p,
                                            const VerifyOptions& opt = {});
InequalityReport verify_young_oneil(const FunctionFamily& family, double s, double p,
                                    const VerifyOptions& opt = {});
InequalityReport verify_besov_equivalence(const FunctionFamily& family, double beta, double s,
                                          const VerifyOptions& opt = {});

/// Validates and runs one case; exceptions other than gate violations are
/// caught and turn the report into a failure with `error` set.
InequalityReport run_case(const CaseSpec& spec, const FunctionFamily& family, const VerifyOptions& opt = {});

/// Runs cases on up to `jobs` threads. Reports come back in input order.
std::vector<InequalityReport> run_cases(const std::vector<CaseSpec>& cases, const FunctionFamily& family,
                                        const VerifyOptions& opt = {}, unsigned jobs = 1);

/// Circular convolution h^n sum_m' K(x_m - x_m') f(x_m') with the punctured
/// Riesz kernel |x|^{s-n} (torus distance, zero at x = 0).
SampledField riesz_kernel_convolve(const SampledField& field, double s);

}  // namespace fracineq
