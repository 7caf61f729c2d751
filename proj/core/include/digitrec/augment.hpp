#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "digitrec/audio.hpp"
#include "digitrec/rng.hpp"

namespace digitrec {

enum class NoiseCategory { Horn, Nature, Vehicle, Hum, Factory };

inline constexpr std::array<NoiseCategory, 5> kAllNoiseCategories = {
    NoiseCategory::Horn, NoiseCategory::Nature, NoiseCategory::Vehicle,
    NoiseCategory::Hum, NoiseCategory::Factory};

std::string_view to_string(NoiseCategory c);
std::optional<NoiseCategory> noise_category_from_string(std::string_view s);

enum class AugmentationKind { Noise, Speed, Reverb, Hall };

std::string_view to_string(AugmentationKind k);
std::optional<AugmentationKind> augmentation_kind_from_string(
    std::string_view s);

/// One sampled transform. Only the fields of the active kind are meaningful;
/// `seed` pins the transform's own randomness (noise waveform, IR tail) so a
/// derived file is reproducible from its manifest record alone.
struct AugmentationSpec {
  AugmentationKind kind = AugmentationKind::Noise;
  NoiseCategory category = NoiseCategory::Horn;  // Noise
  double snr_db = 0.0;                           // Noise
  double factor = 1.0;                           // Speed
  double rt60_s = 0.0;                           // Reverb / Hall
  std::uint64_t seed = 0;
};

/// Categorical distribution over the four transforms plus their parameter
/// ranges. Defaults follow the 70/15/7.5/7.5 split.
struct AugmentationPolicy {
  double p_noise = 0.70;
  double p_speed = 0.15;
  double p_reverb = 0.075;
  double p_hall = 0.075;
  std::vector<double> snr_levels = {0.0, 5.0, 10.0, 15.0, 20.0};
  std::pair<double, double> speed_range = {0.9, 1.1};
  std::vector<NoiseCategory> noise_categories{kAllNoiseCategories.begin(),
                                              kAllNoiseCategories.end()};
  std::pair<double, double> reverb_rt60_range = {0.2, 0.6};
  std::pair<double, double> hall_rt60_range = {1.0, 2.5};

  /// Throws InvalidArgument unless probabilities are non-negative and sum to
  /// 1 within 1e-9, snr_levels is non-empty, and the speed range is positive.
  void validate() const;
};

/// Draws one transform from the policy. Kind first (single uniform against
/// the cumulative distribution), then the kind's parameters, then the
/// transform seed; the draw order is part of the determinism contract.
AugmentationSpec sample_spec(const AugmentationPolicy& policy, Rng& rng);

/// Scales the noise so that 10*log10(P_clean / P_scaled_noise) == snr_db and
/// adds it to the clean signal. Noise shorter than the clean clip is tiled
/// from offset 0; powers are measured over the clean clip's length. The sum
/// is not clamped here.
AudioClip mix_noise_at_snr(const AudioClip& clean, const AudioClip& noise,
                           double snr_db);

/// Speed perturbation by resampling: length becomes round(len/factor), the
/// nominal rate is unchanged, and a tone at f Hz moves to f*factor Hz.
AudioClip change_speed(const AudioClip& clip, double factor);

enum class IrKind { Reverb, Hall };

/// Exponentially decaying white-noise tail reaching -60 dB at rt60_s
/// (length ceil(rt60_s*rate), peak-normalized). Hall adds 5 sparse early
/// reflections inside the first 50 ms.
AudioClip synth_impulse_response(IrKind kind, double rt60_s, int rate,
                                 Rng& rng);

/// Convolves with the IR, truncates to the input length, then restores the
/// input's peak amplitude.
AudioClip apply_ir(const AudioClip& clip, const AudioClip& ir);

/// Synthetic ambient noise, deterministic per rng stream, RMS-normalized to
/// 0.1.
AudioClip synth_noise(NoiseCategory category, double duration_s, int rate,
                      Rng& rng);

/// Applies one sampled transform; the spec's seed drives noise/IR synthesis.
AudioClip apply_augmentation(const AudioClip& clip,
                             const AugmentationSpec& spec);

}  // namespace digitrec
