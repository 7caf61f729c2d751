#include "digitrec/expand.hpp"

#include <algorithm>
#include <unordered_set>

#include "digitrec/errors.hpp"
#include "digitrec/wav.hpp"

namespace digitrec {

namespace {

// Common-gain guard against PCM clipping; SNR and (post-CMN) features are
// scale-invariant, so this does not alter what the mix represents.
void peak_guard(AudioClip& clip) {
  const double peak = peak_amplitude(clip.samples);
  if (peak > 1.0)
    for (auto& v : clip.samples) v /= peak;
}

}  // namespace

Manifest expand_dataset(const Manifest& manifest,
                        const AugmentationPolicy& policy, int factor,
                        const std::filesystem::path& out_dir, Rng& rng) {
  if (factor < 1) throw InvalidArgument("expansion factor must be >= 1");
  policy.validate();
  std::filesystem::create_directories(out_dir);

  Manifest out;
  out.root = out_dir;
  out.entries.reserve(manifest.entries.size() * static_cast<std::size_t>(factor));
  std::unordered_set<std::string> seen_paths;

  for (std::size_t idx = 0; idx < manifest.entries.size(); ++idx) {
    const auto& entry = manifest.entries[idx];
    Rng entry_rng = rng.derive(idx);

    AudioClip clip;
    try {
      clip = read_wav(manifest.resolve(entry));
    } catch (const std::exception& ex) {
      throw IoFailure("entry '" + entry.path + "': " + ex.what());
    }

    const auto label_dir = std::to_string(entry.label);
    std::filesystem::create_directories(out_dir / label_dir);
    auto stem = std::filesystem::path(entry.path).stem().string();

    for (int k = 0; k < factor; ++k) {
      ManifestEntry derived;
      derived.label = entry.label;
      derived.source_id = entry.source_id;
      derived.path = label_dir + "/" + stem + "_a" + std::to_string(k) + ".wav";
      if (!seen_paths.insert(derived.path).second)
        throw IoFailure("duplicate output path " + derived.path);

      AudioClip produced;
      if (k == 0) {
        produced = clip;  // the original is always retained
      } else {
        const auto spec = sample_spec(policy, entry_rng);
        try {
          produced = apply_augmentation(clip, spec);
        } catch (const std::exception& ex) {
          throw Error("entry '" + entry.path + "': " + ex.what());
        }
        derived.augmentation = spec;
      }
      peak_guard(produced);
      write_wav(out_dir / derived.path, produced);
      out.entries.push_back(std::move(derived));
    }
  }
  return out;
}

}  // namespace digitrec
