#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "binomsum/common.hpp"

namespace binomsum::dft {

// Full spectrum with the positive sign convention:
//
//   X[t] = sum_{m < L} x[m] * exp(+2 pi i m t / L),   L = x.size().
//
// Power-of-two lengths go straight through a radix-2 transform; every other
// length is reduced to a power-of-two convolution with a chirp (Bluestein),
// so the cost is O(L log L) for arbitrary L.
std::vector<std::complex<double>> spectrum_pos(const std::vector<std::complex<double>>& x);

// Conservative per-point absolute error bound for spectrum_pos on an input
// with the given l1 norm.
double spectrum_error_bound(double l1_norm, std::size_t length);

// In-place radix-2 transform, n a power of two. sign = +1 or -1 selects the
// twiddle orientation; no normalization is applied.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

}  // namespace binomsum::dft
