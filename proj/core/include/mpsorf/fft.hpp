#pragma once

#include <span>
#include <vector>

#include "mpsorf/geometry.hpp"

namespace mpsorf::detail {

/// In-place radix-2 FFT, length must be a power of two.
/// sign = -1 gives the forward transform sum x_j exp(-2 pi i jk / M),
/// sign = +1 the unnormalized inverse.
void fft_pow2(std::vector<cplx>& data, int sign);

/// Circular conjugate function of real samples on a uniform grid:
/// applies the Fourier multiplier -i sgn(k) (Nyquist mode dropped).
/// The mean of the result is zero. Size must be a power of two.
std::vector<double> conjugate_function(std::span<const double> samples);

/// Fourier coefficients c_k, k = 0..M-1 (signed frequencies folded the usual
/// way), of complex samples on the uniform grid: c = FFT(samples) / M.
std::vector<cplx> fourier_coefficients(std::span<const cplx> samples);

/// Evaluates the trigonometric interpolant of grid samples at angle theta
/// measured in the grid frame (theta = 0 is node 0). Intended for samples of
/// functions analytic in a neighborhood of the closed disk, whose negative
/// frequencies are negligible.
cplx interpolate_samples(std::span<const cplx> samples, double theta);

}  // namespace mpsorf::detail
