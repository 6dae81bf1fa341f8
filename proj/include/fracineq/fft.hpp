#pragma once

#include <vector>

#include "fracineq/field.hpp"

namespace fracineq {

/// Discrete Fourier coefficients in FFT order (index i <-> wavenumber
/// wavenumber(i, N) per axis). Unnormalized forward transform:
///   F_k = sum_m f_m exp(-2 pi i k.m / N),
/// so Parseval reads sum |f|^2 = N^{-n} sum |F|^2.
struct SpectralCoefficients {
  DomainSpec domain;
  std::vector<cplx> values;
};

SpectralCoefficients dft(const SampledField& field);
SampledField idft(const SpectralCoefficients& coeffs);
SampledField idft(SpectralCoefficients&& coeffs);

}  // namespace fracineq
