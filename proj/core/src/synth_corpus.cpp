#include "digitrec/synth_corpus.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "digitrec/errors.hpp"
#include "digitrec/wav.hpp"

namespace digitrec {

namespace {

// Two-pole resonator, y[n] = x[n] + c1*y[n-1] + c2*y[n-2].
std::vector<double> resonate(const std::vector<double>& x, double freq_hz,
                             double bandwidth_hz, int rate) {
  const double r = std::exp(-std::numbers::pi * bandwidth_hz / rate);
  const double c1 = 2.0 * r * std::cos(2.0 * std::numbers::pi * freq_hz / rate);
  const double c2 = -r * r;
  std::vector<double> y(x.size(), 0.0);
  double y1 = 0.0, y2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i] + c1 * y1 + c2 * y2;
    y[i] = v;
    y2 = y1;
    y1 = v;
  }
  return y;
}

}  // namespace

AudioClip synth_digit_token(int digit, int rate, Rng& rng) {
  if (digit < 0 || digit > 9) throw InvalidArgument("digit must be 0-9");
  const double dur = rng.uniform(0.4, 0.7);
  const double f1 = (300.0 + 60.0 * digit) * (1.0 + rng.uniform(-0.03, 0.03));
  const double f2 = (900.0 + 120.0 * digit) * (1.0 + rng.uniform(-0.03, 0.03));
  const double amp = 0.5 * (1.0 + rng.uniform(-0.1, 0.1));

  const auto n = static_cast<std::size_t>(std::llround(dur * rate));
  std::vector<double> pulses(n, 0.0);
  double phase = 1.0;  // fire on the first sample
  for (std::size_t i = 0; i < n; ++i) {
    if (phase >= 1.0) {
      pulses[i] = 1.0;
      phase -= 1.0;
    }
    phase += 120.0 / rate;
  }

  auto low = resonate(pulses, f1, 80.0, rate);
  auto high = resonate(pulses, f2, 120.0, rate);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = low[i] + 0.7 * high[i];

  // 10 ms onset/offset ramps keep the token click-free
  const auto ramp = std::min<std::size_t>(n / 2, static_cast<std::size_t>(0.01 * rate));
  for (std::size_t i = 0; i < ramp; ++i) {
    const double g = static_cast<double>(i + 1) / static_cast<double>(ramp + 1);
    y[i] *= g;
    y[n - 1 - i] *= g;
  }

  double peak = 0.0;
  for (double v : y) peak = std::max(peak, std::fabs(v));
  if (peak > 0.0)
    for (auto& v : y) v *= amp / peak;

  AudioClip clip;
  clip.rate = rate;
  clip.samples = std::move(y);
  return clip;
}

Manifest synth_digit_dataset(int n_per_class, int rate, Rng& rng,
                             const std::filesystem::path& out_dir) {
  if (n_per_class < 1) throw InvalidArgument("n_per_class must be >= 1");
  std::filesystem::create_directories(out_dir);

  Manifest m;
  m.root = out_dir;
  for (int c = 0; c <= 9; ++c) {
    const auto label_dir = out_dir / std::to_string(c);
    std::filesystem::create_directories(label_dir);
    for (int i = 0; i < n_per_class; ++i) {
      Rng token_rng = rng.derive((static_cast<std::uint64_t>(c) << 32) |
                                 static_cast<std::uint32_t>(i));
      auto clip = synth_digit_token(c, rate, token_rng);

      char name[32];
      std::snprintf(name, sizeof(name), "d%d_s%04d", c, i);
      ManifestEntry e;
      e.path = std::to_string(c) + "/" + name + ".wav";
      e.label = c;
      e.source_id = name;
      write_wav(out_dir / e.path, clip);
      m.entries.push_back(std::move(e));
    }
  }
  return m;
}

}  // namespace digitrec
