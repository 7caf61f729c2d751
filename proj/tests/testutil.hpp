#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "digitrec/audio.hpp"
#include "digitrec/fft.hpp"

namespace testutil {

inline digitrec::AudioClip make_sine(double freq_hz, double amp, int rate,
                                     double dur_s) {
  digitrec::AudioClip clip;
  clip.rate = rate;
  const auto n = static_cast<std::size_t>(std::llround(dur_s * rate));
  clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    clip.samples[i] =
        amp * std::sin(2.0 * std::numbers::pi * freq_hz * i / rate);
  return clip;
}

// Independent spectral-peak oracle: zero-padded FFT, argmax over a band.
inline double fft_peak_hz(std::span<const double> x, int rate,
                          double fmin = 0.0, double fmax = -1.0) {
  if (fmax < 0) fmax = rate / 2.0;
  const std::size_t n = digitrec::next_pow2(x.size() * 4);
  auto p = digitrec::power_spectrum(x, n);
  std::size_t best = 0;
  double best_v = -1.0;
  for (std::size_t k = 0; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) * rate / static_cast<double>(n);
    if (f < fmin || f > fmax) continue;
    if (p[k] > best_v) {
      best_v = p[k];
      best = k;
    }
  }
  return static_cast<double>(best) * rate / static_cast<double>(n);
}

inline double rms(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

}  // namespace testutil
