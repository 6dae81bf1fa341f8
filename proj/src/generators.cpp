#include "fracineq/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "fracineq/error.hpp"

namespace fracineq {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduces a displacement onto [-L/2, L/2).
double torus_delta(double x, double c, double period) {
  double d = std::fmod(x - c + 0.5 * period, period);
  if (d < 0) d += period;
  return d - 0.5 * period;
}

double squared_distance(const DomainSpec& domain, std::array<double, 2> x,
                        std::array<double, 2> c) {
  double r2 = 0.0;
  for (int a = 0; a < domain.dimension(); ++a) {
    const double d = torus_delta(x[a], c[a], domain.period());
    r2 += d * d;
  }
  return r2;
}

// cos/sin of 2 pi j / N, indexed by j mod N.
struct UnitRoots {
  explicit UnitRoots(std::size_t n) : n(n), table(n) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
      table[j] = {std::cos(angle), std::sin(angle)};
    }
  }
  // exp(2 pi i k.(m - N/2) / N), i.e. exp(i xi_k . x_m) with exact phase reduction.
  cplx phase(const DomainSpec& domain, std::array<long, 2> k, std::size_t flat) const {
    const auto idx = domain.unflatten(flat);
    const long half = static_cast<long>(n / 2);
    long p = k[0] * (static_cast<long>(idx[0]) - half);
    if (domain.dimension() == 2) p += k[1] * (static_cast<long>(idx[1]) - half);
    const long nn = static_cast<long>(n);
    p %= nn;
    if (p < 0) p += nn;
    return table[static_cast<std::size_t>(p)];
  }
  std::size_t n;
  std::vector<cplx> table;
};

double uniform_pm1(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

void check_mode(const DomainSpec& domain, std::array<long, 2> k) {
  const long half = static_cast<long>(domain.points() / 2);
  for (int a = 0; a < domain.dimension(); ++a) {
    if (k[a] < -half || k[a] >= half) {
      throw InvalidArgument(fmt::format("fourier_mode: wavenumber {} outside Nyquist range [{}, {})",
                                        k[a], -half, half));
    }
  }
}

void add_term(const DomainSpec& domain, const UnitRoots& roots, double weight,
              const FourierMode& mode, std::vector<cplx>& out) {
  check_mode(domain, mode.k);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += weight * roots.phase(domain, mode.k, i);
}

void add_term(const DomainSpec& domain, const UnitRoots&, double weight, const Gaussian& g,
              std::vector<cplx>& out) {
  if (!(g.sigma >= 2.0 * domain.spacing())) {
    throw InvalidArgument(fmt::format("gaussian: sigma = {} under-resolved (needs >= 2h = {})",
                                      g.sigma, 2.0 * domain.spacing()));
  }
  const double norm = std::pow(4.0 * kPi * g.sigma * g.sigma, -0.5 * domain.dimension());
  const double denom = 4.0 * g.sigma * g.sigma;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += weight * norm * std::exp(-squared_distance(domain, domain.point(i), g.center) / denom);
  }
}

void add_term(const DomainSpec& domain, const UnitRoots&, double weight, const SmoothBump& b,
              std::vector<cplx>& out) {
  if (!(b.radius > 0.0)) throw InvalidArgument("smooth_bump: radius must be positive");
  const double r2max = b.radius * b.radius;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double u = squared_distance(domain, domain.point(i), b.center) / r2max;
    if (u < 1.0) out[i] += weight * std::exp(1.0 - 1.0 / (1.0 - u));
  }
}

void add_term(const DomainSpec& domain, const UnitRoots& roots, double weight,
              const RandomBandLimited& r, std::vector<cplx>& out) {
  const long half = static_cast<long>(domain.points() / 2);
  if (r.max_band < 1 || r.max_band >= half) {
    throw InvalidArgument(
        fmt::format("random_band_limited: max_band = {} must lie in [1, N/2 = {})", r.max_band, half));
  }
  std::mt19937_64 rng(r.seed);
  const long band = r.max_band;
  auto accumulate = [&](std::array<long, 2> k) {
    const double a = uniform_pm1(rng);
    const double b = uniform_pm1(rng);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const cplx e = roots.phase(domain, k, i);
      out[i] += weight * (a * e.real() + b * e.imag());
    }
  };
  if (domain.dimension() == 1) {
    for (long k = 1; k <= band; ++k) accumulate({k, 0});
  } else {
    for (long k0 = 0; k0 <= band; ++k0) {
      for (long k1 = -band; k1 <= band; ++k1) {
        if (k0 == 0 && k1 <= 0) continue;
        accumulate({k0, k1});
      }
    }
  }
}

std::string format_center(const std::array<double, 2>& c) {
  return fmt::format("{};{}", c[0], c[1]);
}

}  // namespace

GeneratorSpec GeneratorSpec::operator+(const GeneratorSpec& other) const {
  GeneratorSpec out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  return out;
}

GeneratorSpec GeneratorSpec::scaled(double weight) const {
  GeneratorSpec out = *this;
  for (auto& t : out.terms_) t.weight *= weight;
  return out;
}

std::string GeneratorSpec::describe() const {
  std::string out;
  for (const auto& [weight, term] : terms_) {
    if (!out.empty()) out += "+";
    if (weight != 1.0) out += fmt::format("{}*", weight);
    out += std::visit(
        [](const auto& t) -> std::string {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, FourierMode>) {
            return fmt::format("mode({};{})", t.k[0], t.k[1]);
          } else if constexpr (std::is_same_v<T, Gaussian>) {
            return fmt::format("gaussian({};{})", t.sigma, format_center(t.center));
          } else if constexpr (std::is_same_v<T, SmoothBump>) {
            return fmt::format("bump({};{})", t.radius, format_center(t.center));
          } else {
            return fmt::format("band({};{})", t.seed, t.max_band);
          }
        },
        term);
  }
  return out.empty() ? "zero" : out;
}

SampledField sample(const DomainSpec& domain, const GeneratorSpec& generator) {
  const UnitRoots roots(domain.points());
  std::vector<cplx> out(domain.size());
  for (const auto& [weight, term] : generator.terms()) {
    std::visit([&](const auto& t) { add_term(domain, roots, weight, t, out); }, term);
  }
  return SampledField(domain, std::move(out));
}

double boundary_decay(const SampledField& field) {
  const double peak = field.max_abs();
  if (peak == 0.0) return 0.0;
  const auto& d = field.domain();
  double edge = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const auto idx = d.unflatten(i);
    bool on_edge = idx[0] == 0;
    if (d.dimension() == 2) on_edge = on_edge || idx[1] == 0;
    if (on_edge) edge = std::max(edge, std::abs(field[i]));
  }
  return edge / peak;
}

std::vector<std::string> generator_catalog() {
  return {
      "fourier_mode      k=[k0,k1]               exp(2 pi i k.x / L); each k_a in [-N/2, N/2)",
      "gaussian          sigma, center=[c0,c1]   (4 pi sigma^2)^(-n/2) exp(-|x-c|^2 / (4 sigma^2)); sigma >= 2h",
      "smooth_bump       radius, center=[c0,c1]  exp(1 - 1/(1 - |x-c|^2/R^2)) inside the ball",
      "random_band_limited seed, max_band        real trigonometric polynomial, 1 <= max_band < N/2",
      "sum               terms=[...]             weighted sum; any term may carry \"weight\"",
  };
}

}  // namespace fracineq
