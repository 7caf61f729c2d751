#pragma once

#include <filesystem>

#include "digitrec/audio.hpp"

namespace digitrec {

/// Reads a RIFF/WAVE file: PCM 16-bit or IEEE-float 32-bit, 1 or 2 channels.
/// 16-bit samples are scaled by 1/32768; stereo is averaged to mono.
AudioClip read_wav(const std::filesystem::path& path);

/// Writes mono little-endian PCM 16-bit. Samples are clamped to [-1, 1] and
/// quantized with round-to-nearest so that write∘read is idempotent after the
/// first quantization.
void write_wav(const std::filesystem::path& path, const AudioClip& clip);

}  // namespace digitrec
