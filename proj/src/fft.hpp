#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace zcz::fft {

using cdouble = std::complex<double>;

// Unnormalized forward DFT of arbitrary length:
//   X[k] = sum_i x[i] exp(-2*pi*i*k*sqrt(-1)/n).
// Radix-2 Cooley-Tukey for power-of-two n, Bluestein's chirp transform
// otherwise. Single-threaded and deterministic.
std::vector<cdouble> dft(const std::vector<cdouble>& x);

// Inverse DFT including the 1/n scaling.
std::vector<cdouble> idft(const std::vector<cdouble>& x);

} // namespace zcz::fft
