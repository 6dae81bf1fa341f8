#include "fracineq/field_ops.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fracineq/error.hpp"

namespace fracineq {

namespace {

// Source index of m under x -> lambda x, with the flag telling whether
// lambda x_m stays inside [-L/2, L/2).
//   lambda x_m = -lambda L/2 + lambda m h  ==  -L/2 + m' h
//   m' = lambda m - (lambda - 1) N/2
struct Source {
  std::size_t index;
  bool inside;
};

Source source_index(std::size_t m, long lambda, std::size_t n) {
  const long nn = static_cast<long>(n);
  const long raw = lambda * static_cast<long>(m) - (lambda - 1) * (nn / 2);
  const bool inside = raw >= 0 && raw < nn;
  long wrapped = raw % nn;
  if (wrapped < 0) wrapped += nn;
  return {static_cast<std::size_t>(wrapped), inside};
}

}  // namespace

SampledField dilate(const SampledField& field, long lambda, Extension ext) {
  if (lambda < 1 || (lambda & (lambda - 1)) != 0) {
    throw InvalidArgument(fmt::format("dilate: lambda = {} is not a power of two", lambda));
  }
  const auto& d = field.domain();
  const std::size_t n = d.points();
  std::vector<cplx> out(field.size());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto idx = d.unflatten(flat);
    const Source s0 = source_index(idx[0], lambda, n);
    if (d.dimension() == 1) {
      if (s0.inside || ext == Extension::periodic) out[flat] = field[s0.index];
      continue;
    }
    const Source s1 = source_index(idx[1], lambda, n);
    if ((s0.inside && s1.inside) || ext == Extension::periodic) {
      out[flat] = field[s0.index * n + s1.index];
    }
  }
  return SampledField(d, std::move(out));
}

double lp_norm(const DomainSpec& domain, std::span<const double> magnitudes, double p) {
  if (!(p >= 1.0)) throw InvalidArgument(fmt::format("lp_norm: p = {} < 1", p));
  double peak = 0.0;
  for (double v : magnitudes) peak = std::max(peak, std::abs(v));
  if (std::isinf(p) || peak == 0.0) return peak;
  double sum = 0.0;
  for (double v : magnitudes) sum += std::pow(std::abs(v) / peak, p);
  return peak * std::pow(domain.cell_volume() * sum, 1.0 / p);
}

double lp_norm(const SampledField& field, double p) {
  const auto mags = field.abs();
  return lp_norm(field.domain(), mags, p);
}

}  // namespace fracineq
