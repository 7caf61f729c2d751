#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace digitrec {

/// In-place iterative radix-2 FFT. Size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// FFT of a real signal zero-padded to n (power of two). Returns n bins.
std::vector<std::complex<double>> fft_real(std::span<const double> x,
                                           std::size_t n);

/// Power spectrum |X|^2 / n for bins 0..n/2 (inclusive).
std::vector<double> power_spectrum(std::span<const double> frame,
                                   std::size_t n);

std::size_t next_pow2(std::size_t n);

}  // namespace digitrec
