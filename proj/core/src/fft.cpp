#include "digitrec/fft.hpp"

#include <cmath>
#include <numbers>

#include "digitrec/errors.hpp"

namespace digitrec {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ShapeMismatch("fft size must be a power of two, got " +
                        std::to_string(n));
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1 : -1);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : a) v *= inv_n;
  }
}

std::vector<std::complex<double>> fft_real(std::span<const double> x,
                                           std::size_t n) {
  std::vector<std::complex<double>> a(n);
  const std::size_t m = std::min(x.size(), n);
  for (std::size_t i = 0; i < m; ++i) a[i] = std::complex<double>(x[i], 0.0);
  fft_inplace(a, false);
  return a;
}

std::vector<double> power_spectrum(std::span<const double> frame,
                                   std::size_t n) {
  auto spec = fft_real(frame, n);
  std::vector<double> p(n / 2 + 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= n / 2; ++k) p[k] = std::norm(spec[k]) * inv_n;
  return p;
}

}  // namespace digitrec
