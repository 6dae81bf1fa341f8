#include "fracineq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include <fmt/format.h>

#include "fracineq/besov.hpp"
#include "fracineq/error.hpp"
#include "fracineq/fft.hpp"
#include "fracineq/field_ops.hpp"
#include "fracineq/luxemburg.hpp"
#include "fracineq/relations.hpp"
#include "fracineq/spectral.hpp"

namespace fracineq {

namespace rel = relations;

FunctionFamily::FunctionFamily(DomainSpec domain, std::vector<GeneratorSpec> generators, std::uint64_t seed)
    : domain_(domain), generators_(std::move(generators)), seed_(seed) {
  if (generators_.empty()) throw InvalidArgument("FunctionFamily: empty generator list");
}

FunctionFamily FunctionFamily::standard(std::uint64_t seed, std::size_t points) {
  const DomainSpec domain(1, 16.0, points);
  std::vector<GeneratorSpec> g;
  const double sigmas[] = {0.3, 0.4, 0.5, 0.6, 0.7};
  const double centers[] = {0.0, 0.5, -0.5, 1.0, -1.0};
  for (int i = 0; i < 5; ++i) g.push_back(GeneratorSpec::gaussian(sigmas[i], {centers[i], 0.0}));
  const double radii[] = {1.0, 1.5, 2.0, 2.5, 3.0};
  for (int i = 0; i < 5; ++i) g.push_back(GeneratorSpec::smooth_bump(radii[i], {-centers[i], 0.0}));
  for (long k : {1L, 2L, 3L, 5L, 8L}) {
    g.push_back(GeneratorSpec::fourier_mode(k).scaled(0.5) + GeneratorSpec::fourier_mode(-k).scaled(0.5));
  }
  const int bands[] = {2, 4, 6, 8, 12};
  for (int i = 0; i < 5; ++i) g.push_back(GeneratorSpec::random_band_limited(seed + static_cast<std::uint64_t>(i), bands[i]));
  return FunctionFamily(domain, std::move(g), seed);
}

FunctionFamily FunctionFamily::refined() const { return FunctionFamily(domain_.refined(), generators_, seed_); }

std::vector<SampledField> FunctionFamily::members() const {
  std::vector<SampledField> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(sample(domain_, g).without_mean());
  return out;
}

YoungFunction YoungSpec::build() const {
  if (kind == "power") return YoungFunction::power(p);
  if (kind == "capped_power") return YoungFunction::capped_power(p, q, knee);
  if (kind == "exp_type") return YoungFunction::exp_type();
  if (kind == "table") return YoungFunction::table(knots, densities);
  throw InvalidArgument(fmt::format("unknown Young function kind '{}'", kind));
}

std::string YoungSpec::describe() const { return build().describe(); }

namespace {

struct TagName {
  Theorem theorem;
  const char* tag;
};

constexpr TagName kTags[] = {
    {Theorem::modified_hedberg, "theorem1"},   {Theorem::sobolev_like, "theorem2"},
    {Theorem::mixed_sobolev, "theorem3"},      {Theorem::mixed_hls, "theorem4"},
    {Theorem::orlicz_sobolev, "theorem5"},     {Theorem::classical_hedberg, "hedberg"},
    {Theorem::hls, "hls"},                     {Theorem::phi_maximal, "phi_maximal"},
    {Theorem::maximal_boundedness, "maximal"}, {Theorem::young_oneil, "young_oneil"},
    {Theorem::besov_equivalence, "besov"},
};

}  // namespace

std::string theorem_tag(Theorem t) {
  for (const auto& e : kTags) {
    if (e.theorem == t) return e.tag;
  }
  return "unknown";
}

Theorem theorem_from_tag(const std::string& tag) {
  for (const auto& e : kTags) {
    if (tag == e.tag) return e.theorem;
  }
  throw InvalidArgument(fmt::format("unknown theorem tag '{}'", tag));
}

std::optional<double> InequalityReport::extra(const std::string& key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool refinement_stable(double c_fit, double c_fit_refined) {
  if (!(std::isfinite(c_fit) && std::isfinite(c_fit_refined) && c_fit > 0.0 && c_fit_refined > 0.0)) return false;
  const double r = c_fit_refined / c_fit;
  return r >= 0.5 && r <= 2.0;
}

namespace {

constexpr double kSkipThreshold = 1e-14;

// Running max of lhs / rhs.
struct Fit {
  double c_fit = kNaN;
  double lhs = kNaN;
  double rhs = kNaN;
  std::size_t skipped = 0;
  std::size_t used = 0;

  void add(double l, double r) {
    ++used;
    double ratio = l / r;
    if (!std::isfinite(ratio)) ratio = std::numeric_limits<double>::infinity();
    if (std::isnan(c_fit) || ratio > c_fit) {
      c_fit = ratio;
      lhs = l;
      rhs = r;
    }
  }

  void add_pointwise(std::span<const double> l, std::span<const double> r) {
    double scale = 0.0;
    for (double v : r) scale = std::max(scale, v);
    if (!(scale > 0.0)) {
      skipped += r.size();
      return;
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < kSkipThreshold * scale) {
        ++skipped;
        continue;
      }
      add(l[i], r[i]);
    }
  }

  void skip_member(std::size_t points) { skipped += points; }
};

// Norm-level pairs, skipped against the largest RHS of the family.
Fit fit_pairs(const std::vector<std::pair<double, double>>& pairs) {
  Fit fit;
  double scale = 0.0;
  for (const auto& [l, r] : pairs) scale = std::max(scale, r);
  for (const auto& [l, r] : pairs) {
    if (!(scale > 0.0) || !(r > kSkipThreshold * scale)) {
      ++fit.skipped;
      continue;
    }
    fit.add(l, r);
  }
  return fit;
}

struct GridResult {
  Fit main;
  /// Secondary fitted constants; gating links must be refinement-stable too.
  struct Link {
    std::string name;
    Fit fit;
    bool gating;
  };
  std::vector<Link> links;
  std::vector<std::pair<std::string, double>> extras;
};

using GridEval = std::function<GridResult(const FunctionFamily&)>;

double ratio_or_nan(double a, double b) { return (std::isfinite(a) && std::isfinite(b) && b != 0.0) ? a / b : kNaN; }

InequalityReport assemble(InequalityReport report, const FunctionFamily& family, const VerifyOptions& opt,
                          const GridEval& eval,
                          const std::function<void(InequalityReport&, const GridResult&, const GridResult*)>& post = {}) {
  const GridResult base = eval(family);
  std::optional<GridResult> fine;
  if (opt.refinement) fine = eval(family.refined());

  report.c_fit = base.main.c_fit;
  report.lhs_max = base.main.lhs;
  report.rhs_at_max = base.main.rhs;
  report.skipped = base.main.skipped;
  report.inconclusive = base.main.used == 0 || (fine && fine->main.used == 0);
  bool ok = !report.inconclusive && std::isfinite(report.c_fit);
  if (fine) {
    report.c_fit_refined = fine->main.c_fit;
    report.refinement_ratio = ratio_or_nan(report.c_fit_refined, report.c_fit);
    ok = ok && refinement_stable(report.c_fit, report.c_fit_refined);
  }
  for (std::size_t i = 0; i < base.links.size(); ++i) {
    const auto& link = base.links[i];
    report.extras.emplace_back("c_fit_" + link.name, link.fit.c_fit);
    bool link_ok = link.fit.used > 0 && std::isfinite(link.fit.c_fit);
    if (fine) {
      const double refined = fine->links[i].fit.c_fit;
      report.extras.emplace_back("c_fit_" + link.name + "_refined", refined);
      report.extras.emplace_back("refinement_ratio_" + link.name, ratio_or_nan(refined, link.fit.c_fit));
      link_ok = link_ok && refinement_stable(link.fit.c_fit, refined);
    }
    if (link.gating) ok = ok && link_ok;
  }
  for (const auto& e : base.extras) report.extras.push_back(e);
  if (fine) {
    for (const auto& [k, v] : fine->extras) report.extras.emplace_back(k + "_refined", v);
  }
  report.pass = ok;
  if (post) {
    post(report, base, fine ? &*fine : nullptr);
  }
  return report;
}

InequalityReport new_report(const std::string& theorem, const FunctionFamily& family) {
  InequalityReport r;
  r.theorem = theorem;
  r.params.n = family.domain().dimension();
  return r;
}

std::vector<double> powered_abs(const SampledField& f, double exponent) {
  auto v = f.abs();
  for (double& x : v) x = std::pow(x, exponent);
  return v;
}

// min and max of a / b over the pairs with b > 0.
std::pair<double, double> band(const std::vector<std::pair<double, double>>& pairs) {
  double lo = kNaN, hi = kNaN;
  for (const auto& [a, b] : pairs) {
    if (!(b > 0.0) || !(a > 0.0)) continue;
    const double r = a / b;
    lo = std::isnan(lo) ? r : std::min(lo, r);
    hi = std::isnan(hi) ? r : std::max(hi, r);
  }
  return {lo, hi};
}

}  // namespace

SampledField riesz_kernel_convolve(const SampledField& field, double s) {
  const auto& d = field.domain();
  const auto kernel = riesz_kernel_on_grid(d, s);
  // Recenter so index 0 holds x = 0: grid index m + N/2 sits at x = m h.
  const std::size_t n = d.points();
  std::vector<cplx> shifted(d.size());
  for (std::size_t flat = 0; flat < shifted.size(); ++flat) {
    const auto idx = d.unflatten(flat);
    const std::size_t a = (idx[0] + n / 2) % n;
    const std::size_t src = d.dimension() == 1 ? a : a * n + (idx[1] + n / 2) % n;
    shifted[flat] = kernel[src];
  }
  auto fk = dft(field);
  const auto kk = dft(SampledField(d, std::move(shifted)));
  for (std::size_t i = 0; i < fk.values.size(); ++i) fk.values[i] *= kk.values[i] * d.cell_volume();
  return idft(std::move(fk));
}

InequalityReport verify_modified_hedberg(const FunctionFamily& family, double s, double s1, double beta,
                                         const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  if (!(s1 > 0.0)) throw GateError("theorem1", "0 < s1");
  if (!(s < n)) throw GateError("theorem1", fmt::format("s < n (got s = {}, n = {})", s, n));
  const double theta = rel::hedberg_theta(s, s1, beta);
  auto report = new_report("theorem1", family);
  report.params.s = s;
  report.params.s1 = s1;
  report.params.beta = beta;
  report.params.theta = theta;
  const int k = default_riemann_liouville_order(s);
  report.extras.emplace_back("rl_order_k", k);

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    Fit rl_k, rl_k1;
    const auto quad = LogGridSpec::riemann_liouville_default(fam.domain());
    for (const auto& f : fam.members()) {
      const double b = besov_norm_thermic(f, beta);
      if (!(b > 0.0)) {
        out.main.skip_member(f.size());
        rl_k.skip_member(f.size());
        rl_k1.skip_member(f.size());
        continue;
      }
      const auto m = hl_maximal(fractional_laplacian(f, s)).real();
      std::vector<double> rhs(m.size());
      const double bpow = std::pow(b, theta / (1.0 - theta));
      for (std::size_t i = 0; i < m.size(); ++i) rhs[i] = m[i] * bpow;
      out.main.add_pointwise(powered_abs(fractional_laplacian(f, s1), 1.0 / (1.0 - theta)), rhs);
      rl_k.add_pointwise(powered_abs(riemann_liouville_fraclap(f, s1, s, k, quad), 1.0 / (1.0 - theta)), rhs);
      rl_k1.add_pointwise(powered_abs(riemann_liouville_fraclap(f, s1, s, k + 1, quad), 1.0 / (1.0 - theta)), rhs);
    }
    out.links.push_back({"rl_k", rl_k, false});
    out.links.push_back({"rl_k1", rl_k1, false});
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_theorem2(const FunctionFamily& family, double s, double s1, double beta,
                                 const ExponentSpec& p_spec, const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  const double theta = rel::hedberg_theta(s, s1, beta);
  const auto p0 = VariableExponent::sample(family.domain(), p_spec);
  if (!(s > 0.0 && s * p0.p_plus() < n)) {
    throw GateError("theorem2", fmt::format("0 < s < n/p^+ (got s = {}, n/p^+ = {})", s, n / p0.p_plus()));
  }
  auto report = new_report("theorem2", family);
  report.params.s = s;
  report.params.s1 = s1;
  report.params.beta = beta;
  report.params.theta = theta;
  report.params.p_desc = describe(p_spec);
  report.params.q_desc = fmt::format("{}/(1-theta)", describe(p_spec));

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const auto p = VariableExponent::sample(fam.domain(), p_spec);
    const auto q = p.scaled(1.0 / (1.0 - theta));
    const LittlewoodPaleyBasis basis(fam.domain());
    std::vector<std::pair<double, double>> hedberg, lp, besov_band, sob_band, sob1_band;
    for (const auto& f : fam.members()) {
      const double lhs = luxemburg_norm(fractional_laplacian(f, s1), q);
      const double sob = sobolev_norm(f, s, p);
      const double b = besov_norm_thermic(f, beta);
      hedberg.emplace_back(lhs, std::pow(sob, 1.0 - theta) * std::pow(b, theta));
      const double lhs_lp = lp_square_function_norm(f, s1, q, basis);
      const double sob_lp = lp_square_function_norm(f, s, p, basis);
      const double b_lp = besov_norm_lp(f, beta, basis);
      lp.emplace_back(lhs_lp, std::pow(sob_lp, 1.0 - theta) * std::pow(b_lp, theta));
      besov_band.emplace_back(b, b_lp);
      sob_band.emplace_back(sob, sob_lp);
      sob1_band.emplace_back(lhs, lhs_lp);
    }
    out.main = fit_pairs(hedberg);
    out.links.push_back({"lp", fit_pairs(lp), true});
    // C_H / C_LP is confined to [a1 / (b2^{1-theta} b3^theta), b1 / (a2^{1-theta} a3^theta)]
    // with [a1, b1], [a2, b2], [a3, b3] the measured Sobolev (s1, q), Sobolev
    // (s, p) and Besov bands of the two characterizations.
    const auto [a1, b1] = band(sob1_band);
    const auto [a2, b2] = band(sob_band);
    const auto [a3, b3] = band(besov_band);
    out.extras.emplace_back("besov_band_lo", a3);
    out.extras.emplace_back("besov_band_hi", b3);
    out.extras.emplace_back("sobolev_band_lo", a2);
    out.extras.emplace_back("sobolev_band_hi", b2);
    out.extras.emplace_back("sobolev1_band_lo", a1);
    out.extras.emplace_back("sobolev1_band_hi", b1);
    const double lo = a1 / (std::pow(b2, 1.0 - theta) * std::pow(b3, theta));
    const double hi = b1 / (std::pow(a2, 1.0 - theta) * std::pow(a3, theta));
    const double rho = ratio_or_nan(out.main.c_fit, out.links[0].fit.c_fit);
    out.extras.emplace_back("route_ratio", rho);
    out.extras.emplace_back("route_band_lo", lo);
    out.extras.emplace_back("route_band_hi", hi);
    out.extras.emplace_back("routes_agree", (rho >= lo * (1 - 1e-12) && rho <= hi * (1 + 1e-12)) ? 1.0 : 0.0);
    return out;
  };
  return assemble(std::move(report), family, opt, eval, [](InequalityReport& r, const GridResult& base, const GridResult* fine) {
    auto agree = [](const GridResult& g) {
      for (const auto& [k, v] : g.extras) {
        if (k == "routes_agree") return v == 1.0;
      }
      return false;
    };
    r.pass = r.pass && agree(base) && (!fine || agree(*fine));
  });
}

namespace {

void mixed_gates(const char* name, int n, double s, const VariableExponent& p, double frak_p) {
  if (!(frak_p > 1.0 && std::isfinite(frak_p))) throw GateError(name, "1 < frak_p < inf");
  const double bound = std::min(n / p.p_plus(), n / frak_p);
  if (!(s > 0.0 && s < bound)) {
    throw GateError(name, fmt::format("0 < s < min(n/p^+, n/frak_p) (got s = {}, bound = {})", s, bound));
  }
}

}  // namespace

InequalityReport verify_theorem3(const FunctionFamily& family, double s, const ExponentSpec& p_spec,
                                 double frak_p, const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  mixed_gates("theorem3", n, s, VariableExponent::sample(family.domain(), p_spec), frak_p);
  const double theta = rel::mixed_theta<double>(n, s, frak_p);
  const double r_exp = rel::sobolev_conjugate<double>(n, s, frak_p);
  auto report = new_report("theorem3", family);
  report.params.s = s;
  report.params.beta = rel::mixed_beta<double>(n, s, frak_p);
  report.params.theta = theta;
  report.params.p_desc = describe(p_spec);
  report.params.frak_p = frak_p;
  report.params.q_desc = fmt::format("sigma={}*n/(n-s*frak_p)", describe(p_spec));
  report.extras.emplace_back("sobolev_exponent_r", r_exp);

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const auto p = VariableExponent::sample(fam.domain(), p_spec);
    const auto sigma = p.scaled(n / (n - s * frak_p));
    const MixedSpaceSpec mixed{p, frak_p, s};
    std::vector<std::pair<double, double>> main, sob_link, besov_link;
    for (const auto& f : fam.members()) {
      main.emplace_back(luxemburg_norm(f, sigma), mixed_sobolev_norm(f, mixed));
      const double fr = lp_norm(f, r_exp);
      sob_link.emplace_back(fr, lp_norm(fractional_laplacian(f, s), frak_p));
      besov_link.emplace_back(besov_norm_thermic(f, n / r_exp), fr);
    }
    out.main = fit_pairs(main);
    out.links.push_back({"sobolev_link", fit_pairs(sob_link), true});
    out.links.push_back({"besov_link", fit_pairs(besov_link), true});
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_theorem4(const FunctionFamily& family, double s, const ExponentSpec& p_spec,
                                 double frak_p, const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  mixed_gates("theorem4", n, s, VariableExponent::sample(family.domain(), p_spec), frak_p);
  auto report = new_report("theorem4", family);
  report.params.s = s;
  report.params.beta = rel::mixed_beta<double>(n, s, frak_p);
  report.params.theta = rel::mixed_theta<double>(n, s, frak_p);
  report.params.p_desc = describe(p_spec);
  report.params.frak_p = frak_p;
  report.params.q_desc = fmt::format("sigma={}*n/(n-s*frak_p)", describe(p_spec));

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const auto p = VariableExponent::sample(fam.domain(), p_spec);
    const auto sigma = p.scaled(n / (n - s * frak_p));
    const MixedSpaceSpec mixed{p, frak_p, 0.0};
    std::vector<std::pair<double, double>> pairs;
    for (const auto& f : fam.members()) {
      pairs.emplace_back(luxemburg_norm(riesz_potential(f, s), sigma), mixed_lebesgue_norm(f, mixed));
    }
    out.main = fit_pairs(pairs);
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_theorem5(const FunctionFamily& family, double s, double s1, double beta,
                                 const YoungSpec& a_spec, const VerifyOptions& opt) {
  const double theta = rel::hedberg_theta(s, s1, beta);
  const auto a = a_spec.build();
  const auto c = nabla2_constant(a);
  if (!c) throw GateError("theorem5", fmt::format("Young function {} satisfies nabla_2", a.describe()));
  auto report = new_report("theorem5", family);
  report.params.s = s;
  report.params.s1 = s1;
  report.params.beta = beta;
  report.params.theta = theta;
  report.params.a_desc = a.describe();
  report.params.q_desc = fmt::format("A(t^{{1/(1-theta)}})");
  report.extras.emplace_back("nabla2_constant", *c);

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    std::vector<std::pair<double, double>> pairs;
    for (const auto& f : fam.members()) {
      const double lhs = rescaled_orlicz_norm(fractional_laplacian(f, s1), a, 1.0 / (1.0 - theta));
      const double rhs = std::pow(orlicz_luxemburg_norm(fractional_laplacian(f, s), a), 1.0 - theta) *
                         std::pow(besov_norm_thermic(f, beta), theta);
      pairs.emplace_back(lhs, rhs);
    }
    out.main = fit_pairs(pairs);
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_classical_hedberg(const FunctionFamily& family, double s, double p,
                                          const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  (void)rel::sobolev_conjugate<double>(n, s, p);
  auto report = new_report("hedberg", family);
  report.params.s = s;
  report.params.theta = s * p / n;
  report.params.p_desc = describe(ConstantExponent{p});

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const double a = s * p / n;
    for (const auto& f : fam.members()) {
      const double norm = lp_norm(f, p);
      if (!(norm > 0.0)) {
        out.main.skip_member(f.size());
        continue;
      }
      const auto m = hl_maximal(f).real();
      std::vector<double> rhs(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) rhs[i] = std::pow(m[i], 1.0 - a) * std::pow(norm, a);
      out.main.add_pointwise(riesz_potential(f, s).abs(), rhs);
    }
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_hls(const FunctionFamily& family, double s, const ExponentSpec& p_spec,
                            const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  const auto p0 = VariableExponent::sample(family.domain(), p_spec);
  if (!(s > 0.0 && s * p0.p_plus() < n)) {
    throw GateError("hls", fmt::format("0 < s < n/p^+ (got s = {}, n/p^+ = {})", s, n / p0.p_plus()));
  }
  auto report = new_report("hls", family);
  report.params.s = s;
  report.params.p_desc = describe(p_spec);
  report.params.q_desc = "1/q=1/p-s/n";
  if (p0.is_constant()) report.extras.emplace_back("q", rel::sobolev_conjugate<double>(n, s, p0.p_minus()));

  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const auto p = VariableExponent::sample(fam.domain(), p_spec);
    std::vector<double> qv(p.values().size());
    for (std::size_t i = 0; i < qv.size(); ++i) qv[i] = rel::q_pointwise<double>(p[i], s, n);
    std::optional<double> q_inf;
    if (p.p_infty()) q_inf = rel::q_pointwise<double>(*p.p_infty(), s, n);
    const VariableExponent q(fam.domain(), qv, q_inf, "q");
    std::vector<std::pair<double, double>> pairs, dilated;
    for (const auto& f : fam.members()) {
      pairs.emplace_back(luxemburg_norm(riesz_potential(f, s), q), luxemburg_norm(f, p));
      if (p.is_constant()) {
        const auto g = dilate(f, 2);
        dilated.emplace_back(luxemburg_norm(riesz_potential(g, s), q), luxemburg_norm(g, p));
      }
    }
    out.main = fit_pairs(pairs);
    if (p.is_constant()) {
      const Fit d = fit_pairs(dilated);
      out.extras.emplace_back("dilation_drift", std::abs(d.c_fit / out.main.c_fit - 1.0));
    }
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_phi_maximal_domination(const FunctionFamily& family, const SmoothProfile& profile,
                                               const VerifyOptions& opt) {
  auto report = new_report("phi_maximal", family);
  report.params.p_desc = profile.describe();
  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const auto grid = default_phi_grid(fam.domain());
    for (const auto& f : fam.members()) {
      out.main.add_pointwise(phi_maximal(f, profile, grid).real(), hl_maximal(f).real());
    }
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_maximal_boundedness(const FunctionFamily& family, double p, const VerifyOptions& opt) {
  if (!(p > 1.0)) throw GateError("maximal", fmt::format("1 < p (got p = {})", p));
  auto report = new_report("maximal", family);
  report.params.p_desc = describe(ConstantExponent{p});
  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    std::vector<std::pair<double, double>> pairs;
    for (const auto& f : fam.members()) pairs.emplace_back(lp_norm(hl_maximal(f), p), lp_norm(f, p));
    out.main = fit_pairs(pairs);
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_young_oneil(const FunctionFamily& family, double s, double p, const VerifyOptions& opt) {
  const int n = family.domain().dimension();
  const double q = rel::young_oneil_exponent<double>(n, s, p);
  const double r = rel::lorentz_exponent<double>(n, s);
  auto report = new_report("young_oneil", family);
  report.params.s = s;
  report.params.p_desc = describe(ConstantExponent{p});
  report.params.q_desc = fmt::format("q={}", q);
  report.extras.emplace_back("lorentz_r", r);
  report.extras.emplace_back("q", q);
  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const double kernel_norm = weak_lorentz_norm(riesz_kernel_on_grid(fam.domain(), s), r);
    std::vector<std::pair<double, double>> pairs;
    for (const auto& f : fam.members()) {
      pairs.emplace_back(lp_norm(riesz_kernel_convolve(f, s), q), kernel_norm * lp_norm(f, p));
    }
    out.main = fit_pairs(pairs);
    out.extras.emplace_back("kernel_weak_lorentz", kernel_norm);
    return out;
  };
  return assemble(std::move(report), family, opt, eval);
}

InequalityReport verify_besov_equivalence(const FunctionFamily& family, double beta, double s,
                                          const VerifyOptions& opt) {
  if (!(beta > 0.0)) throw GateError("besov", "beta > 0");
  if (!(s > 0.0)) throw GateError("besov", "s > 0");
  auto report = new_report("besov", family);
  report.params.s = s;
  report.params.beta = beta;
  auto eval = [=](const FunctionFamily& fam) {
    GridResult out;
    const LittlewoodPaleyBasis basis(fam.domain());
    std::vector<std::pair<double, double>> deriv, thermic_lp;
    for (const auto& f : fam.members()) {
      const double b = besov_norm_thermic(f, beta);
      deriv.emplace_back(besov_norm_thermic(fractional_laplacian(f, s), beta + s), b);
      thermic_lp.emplace_back(b, besov_norm_lp(f, beta, basis));
    }
    out.main = fit_pairs(deriv);
    const auto [dlo, dhi] = band(deriv);
    const auto [lo, hi] = band(thermic_lp);
    out.extras.emplace_back("derivative_band_lo", dlo);
    out.extras.emplace_back("derivative_band_hi", dhi);
    out.extras.emplace_back("thermic_lp_band_lo", lo);
    out.extras.emplace_back("thermic_lp_band_hi", hi);
    out.extras.emplace_back("thermic_lp_band_width", hi / lo);
    return out;
  };
  return assemble(std::move(report), family, opt, eval, [](InequalityReport& r, const GridResult&, const GridResult* fine) {
    if (!fine) return;
    const double lo = *r.extra("thermic_lp_band_lo"), hi = *r.extra("thermic_lp_band_hi");
    const double lo2 = *r.extra("thermic_lp_band_lo_refined"), hi2 = *r.extra("thermic_lp_band_hi_refined");
    r.extras.emplace_back("thermic_lp_band_drift", std::max(std::abs(lo2 / lo - 1.0), std::abs(hi2 / hi - 1.0)));
  });
}

void CaseSpec::validate(const DomainSpec& domain) const {
  const int n = domain.dimension();
  const auto need = [&](double v, const char* name) {
    if (std::isnan(v)) throw GateError(theorem_tag(theorem), fmt::format("parameter {} is required", name));
  };
  auto exponent_at = [&]() -> VariableExponent {
    if (!exponent) throw GateError(theorem_tag(theorem), "exponent p(.) is required");
    return VariableExponent::sample(domain, *exponent);
  };
  const std::string tag = theorem_tag(theorem);
  switch (theorem) {
    case Theorem::modified_hedberg:
      need(s, "s");
      need(beta, "beta");
      if (!(s1 > 0.0 && s1 < s && s < n)) throw GateError(tag, "0 < s1 < s < n");
      (void)rel::hedberg_theta(s, s1, beta);
      break;
    case Theorem::sobolev_like: {
      need(s, "s");
      need(beta, "beta");
      (void)rel::hedberg_theta(s, s1, beta);
      const auto p = exponent_at();
      if (!(s > 0.0 && s * p.p_plus() < n)) throw GateError(tag, "0 < s < n/p^+");
      break;
    }
    case Theorem::mixed_sobolev:
    case Theorem::mixed_hls:
      need(s, "s");
      need(frak_p, "frak_p");
      mixed_gates(tag.c_str(), n, s, exponent_at(), frak_p);
      break;
    case Theorem::orlicz_sobolev:
      need(s, "s");
      need(beta, "beta");
      (void)rel::hedberg_theta(s, s1, beta);
      if (!young) throw GateError(tag, "Young function is required");
      if (!nabla2_constant(young->build())) throw GateError(tag, "Young function satisfies nabla_2");
      break;
    case Theorem::classical_hedberg:
      need(s, "s");
      need(p, "p");
      (void)rel::sobolev_conjugate<double>(n, s, p);
      break;
    case Theorem::hls: {
      need(s, "s");
      const auto pe = exponent_at();
      if (!(s > 0.0 && s * pe.p_plus() < n)) throw GateError(tag, "0 < s < n/p^+");
      break;
    }
    case Theorem::phi_maximal:
      break;
    case Theorem::maximal_boundedness:
      need(p, "p");
      if (!(p > 1.0)) throw GateError(tag, "1 < p");
      break;
    case Theorem::young_oneil:
      need(s, "s");
      need(p, "p");
      (void)rel::young_oneil_exponent<double>(n, s, p);
      break;
    case Theorem::besov_equivalence:
      need(s, "s");
      need(beta, "beta");
      if (!(beta > 0.0 && s > 0.0)) throw GateError(tag, "beta > 0, s > 0");
      break;
  }
}

InequalityReport run_case(const CaseSpec& spec, const FunctionFamily& family, const VerifyOptions& opt) {
  spec.validate(family.domain());
  InequalityReport report;
  try {
    switch (spec.theorem) {
      case Theorem::modified_hedberg:
        report = verify_modified_hedberg(family, spec.s, spec.s1, spec.beta, opt);
        break;
      case Theorem::sobolev_like:
        report = verify_theorem2(family, spec.s, spec.s1, spec.beta, *spec.exponent, opt);
        break;
      case Theorem::mixed_sobolev:
        report = verify_theorem3(family, spec.s, *spec.exponent, spec.frak_p, opt);
        break;
      case Theorem::mixed_hls:
        report = verify_theorem4(family, spec.s, *spec.exponent, spec.frak_p, opt);
        break;
      case Theorem::orlicz_sobolev:
        report = verify_theorem5(family, spec.s, spec.s1, spec.beta, *spec.young, opt);
        break;
      case Theorem::classical_hedberg:
        report = verify_classical_hedberg(family, spec.s, spec.p, opt);
        break;
      case Theorem::hls:
        report = verify_hls(family, spec.s, *spec.exponent, opt);
        break;
      case Theorem::phi_maximal:
        report = verify_phi_maximal_domination(family, spec.profile, opt);
        break;
      case Theorem::maximal_boundedness:
        report = verify_maximal_boundedness(family, spec.p, opt);
        break;
      case Theorem::young_oneil:
        report = verify_young_oneil(family, spec.s, spec.p, opt);
        break;
      case Theorem::besov_equivalence:
        report = verify_besov_equivalence(family, spec.beta, spec.s, opt);
        break;
    }
  } catch (const GateError&) {
    throw;
  } catch (const std::exception& e) {
    report = InequalityReport{};
    report.theorem = theorem_tag(spec.theorem);
    report.params.n = family.domain().dimension();
    report.error = e.what();
    report.pass = false;
  }
  report.case_id = spec.case_id;
  return report;
}

std::vector<InequalityReport> run_cases(const std::vector<CaseSpec>& cases, const FunctionFamily& family,
                                        const VerifyOptions& opt, unsigned jobs) {
  std::vector<InequalityReport> out(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        out[i] = run_case(cases[i], family, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace fracineq
