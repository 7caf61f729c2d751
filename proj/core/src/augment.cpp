#include "digitrec/augment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "digitrec/errors.hpp"

namespace digitrec {

std::string_view to_string(NoiseCategory c) {
  switch (c) {
    case NoiseCategory::Horn: return "horn";
    case NoiseCategory::Nature: return "nature";
    case NoiseCategory::Vehicle: return "vehicle";
    case NoiseCategory::Hum: return "hum";
    case NoiseCategory::Factory: return "factory";
  }
  return "horn";
}

std::optional<NoiseCategory> noise_category_from_string(std::string_view s) {
  for (auto c : kAllNoiseCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::string_view to_string(AugmentationKind k) {
  switch (k) {
    case AugmentationKind::Noise: return "noise";
    case AugmentationKind::Speed: return "speed";
    case AugmentationKind::Reverb: return "reverb";
    case AugmentationKind::Hall: return "hall";
  }
  return "noise";
}

std::optional<AugmentationKind> augmentation_kind_from_string(
    std::string_view s) {
  for (auto k : {AugmentationKind::Noise, AugmentationKind::Speed,
                 AugmentationKind::Reverb, AugmentationKind::Hall})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

void AugmentationPolicy::validate() const {
  const double probs[] = {p_noise, p_speed, p_reverb, p_hall};
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw InvalidArgument("augmentation probability < 0");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw InvalidArgument("augmentation probabilities sum to " +
                          std::to_string(sum) + ", expected 1.0");
  if (snr_levels.empty()) throw InvalidArgument("snr_levels empty");
  if (speed_range.first <= 0.0 || speed_range.second < speed_range.first)
    throw InvalidArgument("bad speed_range");
  if (noise_categories.empty()) throw InvalidArgument("no noise categories");
  if (reverb_rt60_range.first <= 0.0 || hall_rt60_range.first <= 0.0)
    throw InvalidArgument("rt60 ranges must be positive");
}

AugmentationSpec sample_spec(const AugmentationPolicy& policy, Rng& rng) {
  policy.validate();
  AugmentationSpec spec;
  const double u = rng.uniform();
  if (u < policy.p_noise) {
    spec.kind = AugmentationKind::Noise;
    spec.category =
        policy.noise_categories[rng.uniform_index(policy.noise_categories.size())];
    spec.snr_db = policy.snr_levels[rng.uniform_index(policy.snr_levels.size())];
  } else if (u < policy.p_noise + policy.p_speed) {
    spec.kind = AugmentationKind::Speed;
    spec.factor = rng.uniform(policy.speed_range.first, policy.speed_range.second);
  } else if (u < policy.p_noise + policy.p_speed + policy.p_reverb) {
    spec.kind = AugmentationKind::Reverb;
    spec.rt60_s =
        rng.uniform(policy.reverb_rt60_range.first, policy.reverb_rt60_range.second);
  } else {
    spec.kind = AugmentationKind::Hall;
    spec.rt60_s =
        rng.uniform(policy.hall_rt60_range.first, policy.hall_rt60_range.second);
  }
  spec.seed = rng.next_u64();
  return spec;
}

AudioClip mix_noise_at_snr(const AudioClip& clean, const AudioClip& noise,
                           double snr_db) {
  if (clean.rate != noise.rate)
    throw RateMismatch("mix_noise_at_snr: clean " + std::to_string(clean.rate) +
                       " Hz vs noise " + std::to_string(noise.rate) + " Hz");
  if (clean.empty()) throw SilentClean("mix_noise_at_snr: empty clean clip");
  if (noise.empty()) throw SilentNoise("mix_noise_at_snr: empty noise clip");

  const std::size_t n = clean.samples.size();
  const double p_clean = mean_power(clean.samples);
  if (p_clean == 0.0) throw SilentClean("mix_noise_at_snr: zero-power clean");

  double p_noise = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = noise.samples[i % noise.samples.size()];
    p_noise += v * v;
  }
  p_noise /= static_cast<double>(n);
  if (p_noise == 0.0) throw SilentNoise("mix_noise_at_snr: zero-power noise");

  const double gain = std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));
  AudioClip out;
  out.rate = clean.rate;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.samples[i] =
        clean.samples[i] + gain * noise.samples[i % noise.samples.size()];
  return out;
}

AudioClip change_speed(const AudioClip& clip, double factor) {
  if (!(factor > 0.5 && factor <= 2.0))
    throw InvalidArgument("change_speed factor " + std::to_string(factor) +
                          " outside (0.5, 2.0]");
  if (clip.empty()) throw EmptySignal("change_speed: empty clip");
  if (factor == 1.0) return clip;
  const auto out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(clip.samples.size()) / factor));
  AudioClip out;
  out.rate = clip.rate;
  out.samples = sinc_interpolate(clip.samples, clip.rate, clip.rate / factor,
                                 out_len);
  return out;
}

AudioClip synth_impulse_response(IrKind kind, double rt60_s, int rate,
                                 Rng& rng) {
  if (rt60_s <= 0.0) throw InvalidArgument("rt60 must be positive");
  const auto n = static_cast<std::size_t>(std::ceil(rt60_s * rate));
  AudioClip ir;
  ir.rate = rate;
  ir.samples.resize(n);
  const double decay = 6.9078 / (rt60_s * rate);  // -60 dB at rt60
  for (std::size_t i = 0; i < n; ++i)
    ir.samples[i] = std::exp(-decay * static_cast<double>(i)) * rng.normal();

  if (kind == IrKind::Hall) {
    const auto window = std::max<std::size_t>(
        1, std::min(n, static_cast<std::size_t>(0.05 * rate)));
    for (int k = 0; k < 5; ++k) {
      const std::size_t pos = rng.uniform_index(window);
      const double amp = rng.uniform(0.4, 0.9);
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      ir.samples[pos] += sign * amp;
    }
  }

  const double peak = peak_amplitude(ir.samples);
  if (peak > 0.0)
    for (auto& v : ir.samples) v /= peak;
  return ir;
}

AudioClip apply_ir(const AudioClip& clip, const AudioClip& ir) {
  if (clip.rate != ir.rate)
    throw RateMismatch("apply_ir: clip " + std::to_string(clip.rate) +
                       " Hz vs ir " + std::to_string(ir.rate) + " Hz");
  if (clip.empty()) throw EmptySignal("apply_ir: empty clip");
  auto wet = convolve_full(clip.samples, ir.samples);
  wet.resize(clip.samples.size());
  const double in_peak = peak_amplitude(clip.samples);
  const double out_peak = peak_amplitude(wet);
  const double scale = out_peak > 0.0 ? in_peak / out_peak : 1.0;
  AudioClip out;
  out.rate = clip.rate;
  out.samples = std::move(wet);
  for (auto& v : out.samples) v *= scale;
  return out;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void rms_normalize(std::vector<double>& x, double target_rms) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  const double r = std::sqrt(acc / static_cast<double>(x.size()));
  const double scale = target_rms / r;
  for (auto& v : x) v *= scale;
}

std::vector<double> gen_horn(std::size_t n, int rate, Rng& rng) {
  std::vector<double> y(n, 0.0);
  const double f0 = 400.0;
  const double am_rate = rng.uniform(2.0, 4.0);
  const double am_phase = rng.uniform(0.0, kTwoPi);
  double phases[5];
  for (int k = 0; k < 5; ++k) phases[k] = rng.uniform(0.0, kTwoPi);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    double s = 0.0;
    for (int k = 1; k <= 5; ++k)
      s += std::sin(kTwoPi * f0 * k * t + phases[k - 1]) / k;
    const double am = 1.0 + 0.3 * std::sin(kTwoPi * am_rate * t + am_phase);
    y[i] = s * am;
  }
  return y;
}

std::vector<double> gen_nature(std::size_t n, int rate, Rng& rng) {
  // Kellet-style pink filter plus a few bird-like descending chirps.
  std::vector<double> y(n, 0.0);
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = rng.normal();
    b0 = 0.99765 * b0 + w * 0.0990460;
    b1 = 0.96300 * b1 + w * 0.2965164;
    b2 = 0.57000 * b2 + w * 1.0526913;
    y[i] = (b0 + b1 + b2 + w * 0.1848) * 0.25;
  }
  const int n_chirps = 3;
  for (int c = 0; c < n_chirps; ++c) {
    const double t0 = rng.uniform(0.0, std::max(0.0, static_cast<double>(n) / rate - 0.15));
    const double f_start = rng.uniform(1500.0, 3500.0);
    const double f_end = f_start * rng.uniform(0.5, 0.8);
    const auto start = static_cast<std::size_t>(t0 * rate);
    const auto len = std::min<std::size_t>(static_cast<std::size_t>(0.1 * rate),
                                           n - start);
    double phase = rng.uniform(0.0, kTwoPi);
    for (std::size_t i = 0; i < len; ++i) {
      const double frac = static_cast<double>(i) / static_cast<double>(len);
      const double f = f_start + (f_end - f_start) * frac;
      phase += kTwoPi * f / rate;
      const double env = std::sin(std::numbers::pi * frac);
      y[start + i] += 0.7 * env * std::sin(phase);
    }
  }
  return y;
}

std::vector<double> gen_vehicle(std::size_t n, int rate, Rng& rng) {
  // brown noise through a gentle low-pass: engine-like rumble
  std::vector<double> y(n, 0.0);
  double brown = 0.0, lp = 0.0;
  const double alpha = 1.0 - std::exp(-kTwoPi * 300.0 / rate);
  for (std::size_t i = 0; i < n; ++i) {
    brown = 0.995 * brown + 0.1 * rng.normal();
    lp += alpha * (brown - lp);
    y[i] = lp;
  }
  return y;
}

std::vector<double> gen_hum(std::size_t n, int rate, Rng& rng) {
  std::vector<double> y(n, 0.0);
  double phases[5];
  for (int k = 0; k < 5; ++k) phases[k] = rng.uniform(0.0, kTwoPi);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    double s = 0.0;
    for (int k = 1; k <= 5; ++k)
      s += std::sin(kTwoPi * 50.0 * k * t + phases[k - 1]) / (k * k);
    y[i] = s;
  }
  return y;
}

std::vector<double> gen_factory(std::size_t n, int rate, Rng& rng) {
  std::vector<double> y(n, 0.0);
  // gated white-noise bursts
  std::size_t i = 0;
  bool on = true;
  while (i < n) {
    const auto seg = static_cast<std::size_t>(rng.uniform(0.05, 0.25) * rate);
    const std::size_t end = std::min(n, i + seg);
    if (on)
      for (; i < end; ++i) y[i] = 0.4 * rng.normal();
    else
      i = end;
    on = !on;
  }
  // periodic impacts with a decaying metallic ring
  const auto period = static_cast<std::size_t>(0.5 * rate);
  for (std::size_t start = period / 2; start < n; start += period) {
    const double f_ring = rng.uniform(800.0, 2000.0);
    const double phase = rng.uniform(0.0, kTwoPi);
    const auto len = std::min<std::size_t>(static_cast<std::size_t>(0.08 * rate),
                                           n - start);
    for (std::size_t k = 0; k < len; ++k) {
      const double env = std::exp(-10.0 * static_cast<double>(k) / len);
      y[start + k] += 2.0 * env * std::sin(kTwoPi * f_ring * k / rate + phase);
    }
  }
  return y;
}

}  // namespace

AudioClip synth_noise(NoiseCategory category, double duration_s, int rate,
                      Rng& rng) {
  if (duration_s <= 0.0) throw InvalidArgument("noise duration must be > 0");
  const auto n =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(duration_s * rate)));
  std::vector<double> y;
  switch (category) {
    case NoiseCategory::Horn: y = gen_horn(n, rate, rng); break;
    case NoiseCategory::Nature: y = gen_nature(n, rate, rng); break;
    case NoiseCategory::Vehicle: y = gen_vehicle(n, rate, rng); break;
    case NoiseCategory::Hum: y = gen_hum(n, rate, rng); break;
    case NoiseCategory::Factory: y = gen_factory(n, rate, rng); break;
  }
  rms_normalize(y, 0.1);
  AudioClip out;
  out.rate = rate;
  out.samples = std::move(y);
  return out;
}

AudioClip apply_augmentation(const AudioClip& clip,
                             const AugmentationSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.kind) {
    case AugmentationKind::Noise: {
      const double dur =
          static_cast<double>(clip.samples.size()) / clip.rate;
      auto noise = synth_noise(spec.category, dur, clip.rate, rng);
      noise.samples.resize(clip.samples.size(), 0.0);
      return mix_noise_at_snr(clip, noise, spec.snr_db);
    }
    case AugmentationKind::Speed:
      return change_speed(clip, spec.factor);
    case AugmentationKind::Reverb: {
      auto ir = synth_impulse_response(IrKind::Reverb, spec.rt60_s, clip.rate, rng);
      return apply_ir(clip, ir);
    }
    case AugmentationKind::Hall: {
      auto ir = synth_impulse_response(IrKind::Hall, spec.rt60_s, clip.rate, rng);
      return apply_ir(clip, ir);
    }
  }
  throw InvalidArgument("unknown augmentation kind");
}

}  // namespace digitrec
