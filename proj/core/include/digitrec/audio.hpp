#pragma once

#include <span>
#include <vector>

namespace digitrec {

/// Mono audio: samples nominally in [-1, 1] (writers clamp; intermediate
/// math may exceed), at a positive sample rate.
struct AudioClip {
  std::vector<double> samples;
  int rate = 0;

  double duration_s() const {
    return rate > 0 ? static_cast<double>(samples.size()) / rate : 0.0;
  }
  bool empty() const { return samples.empty(); }
};

/// Mean of squared samples. Throws EmptySignal on an empty input.
double mean_power(std::span<const double> x);

/// Peak absolute amplitude; 0 for empty input.
double peak_amplitude(std::span<const double> x);

/// Full linear convolution, output length |x| + |h| - 1.
/// Dispatches to the FFT path for large products; both paths agree to 1e-9.
std::vector<double> convolve_full(std::span<const double> x,
                                  std::span<const double> h);
std::vector<double> convolve_direct(std::span<const double> x,
                                    std::span<const double> h);
std::vector<double> convolve_fft(std::span<const double> x,
                                 std::span<const double> h);

/// Kaiser-windowed-sinc resampling to target_rate. Output length is
/// round(len * target_rate / rate). Identity (bit-exact copy) when the rates
/// already match.
AudioClip resample(const AudioClip& clip, int target_rate);

/// Shared kernel behind resample and speed perturbation: interpolate at a
/// fixed input/output step ratio, producing exactly out_len samples.
std::vector<double> sinc_interpolate(std::span<const double> x, double in_rate,
                                     double out_rate, std::size_t out_len);

}  // namespace digitrec
