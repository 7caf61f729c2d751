#pragma once

#include <filesystem>

#include "digitrec/augment.hpp"
#include "digitrec/manifest.hpp"

namespace digitrec {

/// Fivefold-style dataset expansion: for every entry, writes the original
/// plus (factor-1) independently sampled augmentations into out_dir as PCM16
/// WAVs and returns the new manifest (specs recorded per derived file).
/// Each entry's randomness derives from (rng, entry index), so the output is
/// independent of processing order.
Manifest expand_dataset(const Manifest& manifest,
                        const AugmentationPolicy& policy, int factor,
                        const std::filesystem::path& out_dir, Rng& rng);

}  // namespace digitrec
