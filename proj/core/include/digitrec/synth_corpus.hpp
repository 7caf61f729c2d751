#pragma once

#include <filesystem>

#include "digitrec/manifest.hpp"
#include "digitrec/rng.hpp"

namespace digitrec {

/// Desk-scale stand-in corpus: each digit class c is a vowel-like token — a
/// 120 Hz pulse train through two resonators at F1 = 300+60c Hz and
/// F2 = 900+120c Hz — with per-token jitter (±3% formants, ±10% amplitude)
/// and duration uniform in [0.4, 0.7] s. Deterministic per seed; files land
/// under out_dir/<digit>/ with a manifest describing them.
Manifest synth_digit_dataset(int n_per_class, int rate, Rng& rng,
                             const std::filesystem::path& out_dir);

/// One synthetic token (exposed for tests/oracles).
AudioClip synth_digit_token(int digit, int rate, Rng& rng);

}  // namespace digitrec
