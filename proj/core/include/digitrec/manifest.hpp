#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "digitrec/augment.hpp"

namespace digitrec {

struct ManifestEntry {
  std::string path;  // relative to the manifest root
  int label = -1;    // digit 0..9
  std::string source_id;
  std::optional<AugmentationSpec> augmentation;
  std::optional<std::string> split;  // "train" | "val" | "test"
};

struct Manifest {
  std::filesystem::path root;
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const ManifestEntry& e) const {
    return root / e.path;
  }
};

enum class LabelRule { ParentFolder, FilenamePrefix };

/// Discovers every .wav under dir (recursively) and labels it by the chosen
/// rule. Entries come back sorted by path. Files whose label cannot be read
/// as a digit 0-9 are collected and reported in one UnlabeledFile error.
Manifest scan_directory(const std::filesystem::path& dir, LabelRule rule);

/// JSONL, one entry per line, fields exactly:
/// path, label, source_id, augmentation{kind, params..., seed}|null, split|null.
Manifest load_manifest(const std::filesystem::path& path);
void save_manifest(const std::filesystem::path& path, const Manifest& m);

/// Per-label entry counts (index 0..9).
std::vector<std::size_t> label_histogram(const Manifest& m);

}  // namespace digitrec
