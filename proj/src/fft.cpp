#include "fracineq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace fracineq {

namespace {

// fftw_plan creation is not thread-safe; execution through the new-array
// interface is. Plans are in-place and unaligned so any std::vector buffer
// can be passed to fftw_execute_dft.
class PlanCache {
 public:
  fftw_plan get(int dim, std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(dim, n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const std::size_t total = dim == 1 ? n : n * n;
    std::vector<cplx> scratch(total);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = dim == 1
                         ? fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, flags)
                         : fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), buf, buf,
                                            sign, flags);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void transform_in_place(const DomainSpec& domain, std::vector<cplx>& data, int sign) {
  fftw_plan plan = plan_cache().get(domain.dimension(), domain.points(), sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

SpectralCoefficients dft(const SampledField& field) {
  std::vector<cplx> data(field.values().begin(), field.values().end());
  transform_in_place(field.domain(), data, FFTW_FORWARD);
  return {field.domain(), std::move(data)};
}

SampledField idft(SpectralCoefficients&& coeffs) {
  transform_in_place(coeffs.domain, coeffs.values, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(coeffs.values.size());
  for (auto& v : coeffs.values) v *= scale;
  return SampledField(coeffs.domain, std::move(coeffs.values));
}

SampledField idft(const SpectralCoefficients& coeffs) {
  return idft(SpectralCoefficients(coeffs));
}

}  // namespace fracineq
