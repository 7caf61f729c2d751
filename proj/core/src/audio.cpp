#include "digitrec/audio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "digitrec/errors.hpp"
#include "digitrec/fft.hpp"

namespace digitrec {

double mean_power(std::span<const double> x) {
  if (x.empty()) throw EmptySignal("mean_power of empty signal");
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc / static_cast<double>(x.size());
}

double peak_amplitude(std::span<const double> x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::fabs(v));
  return peak;
}

std::vector<double> convolve_direct(std::span<const double> x,
                                    std::span<const double> h) {
  if (x.empty() || h.empty()) throw EmptySignal("convolve of empty signal");
  std::vector<double> y(x.size() + h.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    for (std::size_t j = 0; j < h.size(); ++j) y[i + j] += xi * h[j];
  }
  return y;
}

std::vector<double> convolve_fft(std::span<const double> x,
                                 std::span<const double> h) {
  if (x.empty() || h.empty()) throw EmptySignal("convolve of empty signal");
  const std::size_t out_len = x.size() + h.size() - 1;
  const std::size_t n = next_pow2(out_len);
  auto fx = fft_real(x, n);
  auto fh = fft_real(h, n);
  for (std::size_t i = 0; i < n; ++i) fx[i] *= fh[i];
  fft_inplace(fx, true);
  std::vector<double> y(out_len);
  for (std::size_t i = 0; i < out_len; ++i) y[i] = fx[i].real();
  return y;
}

std::vector<double> convolve_full(std::span<const double> x,
                                  std::span<const double> h) {
  if (x.size() * h.size() > (1u << 16)) return convolve_fft(x, h);
  return convolve_direct(x, h);
}

namespace {

// Kaiser-windowed sinc interpolation kernel, 32 zero crossings per side
// ("64 taps per phase" at the design rate), beta 8.6.
constexpr double kKaiserBeta = 8.6;
constexpr int kZeroCrossings = 32;
constexpr int kShapeTableSize = 1 << 15;

double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double q = x * x * 0.25;
  for (int k = 1; k < 64; ++k) {
    term *= q / static_cast<double>(k * k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

// Shape s(u) = sinc(Z*u) * kaiser(u) on u in [0,1]; the rate pair only
// scales it in time and amplitude, so one table serves every ratio.
const std::vector<double>& kernel_shape() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kShapeTableSize + 2, 0.0);
    const double inv_i0b = 1.0 / bessel_i0(kKaiserBeta);
    t[0] = 1.0;
    for (int i = 1; i <= kShapeTableSize; ++i) {
      const double u = static_cast<double>(i) / kShapeTableSize;
      const double v = std::numbers::pi * kZeroCrossings * u;
      const double sinc = std::sin(v) / v;
      const double win =
          bessel_i0(kKaiserBeta * std::sqrt(1.0 - u * u)) * inv_i0b;
      t[i] = sinc * win;
    }
    return t;
  }();
  return table;
}

inline double kernel_at(double u) {
  // |u| <= 1; linear interpolation into the shape table
  const double s = std::fabs(u) * kShapeTableSize;
  const std::size_t i = static_cast<std::size_t>(s);
  const double f = s - static_cast<double>(i);
  const auto& t = kernel_shape();
  return t[i] + f * (t[i + 1] - t[i]);
}

}  // namespace

std::vector<double> sinc_interpolate(std::span<const double> x, double in_rate,
                                     double out_rate, std::size_t out_len) {
  if (x.empty()) throw EmptySignal("sinc_interpolate of empty signal");
  // cutoff at 0.95 * min(rate, target)/2, in cycles per input sample
  const double fn = 0.95 * 0.5 * std::min(in_rate, out_rate) / in_rate;
  const double half_width = kZeroCrossings / (2.0 * fn);
  const double gain = 2.0 * fn;
  const double step = in_rate / out_rate;
  const auto n = static_cast<long long>(x.size());

  std::vector<double> y(out_len, 0.0);
  for (std::size_t j = 0; j < out_len; ++j) {
    const double center = static_cast<double>(j) * step;
    const auto lo =
        std::max(0LL, static_cast<long long>(std::ceil(center - half_width)));
    const auto hi = std::min(
        n - 1, static_cast<long long>(std::floor(center + half_width)));
    double acc = 0.0;
    for (long long i = lo; i <= hi; ++i)
      acc += x[static_cast<std::size_t>(i)] *
             kernel_at((center - static_cast<double>(i)) / half_width);
    y[j] = acc * gain;
  }
  return y;
}

AudioClip resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) throw RateMismatch("resample target rate must be > 0");
  if (clip.rate <= 0) throw RateMismatch("resample source rate must be > 0");
  if (target_rate == clip.rate) return clip;
  const auto out_len = static_cast<std::size_t>(std::llround(
      static_cast<double>(clip.samples.size()) * target_rate / clip.rate));
  AudioClip out;
  out.rate = target_rate;
  out.samples = sinc_interpolate(clip.samples, clip.rate, target_rate, out_len);
  return out;
}

}  // namespace digitrec
