#include "digitrec/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "digitrec/errors.hpp"

namespace digitrec {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw MalformedWav(path.string() + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const std::uint8_t* data = nullptr;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const char* id = reinterpret_cast<const char*>(buf.data() + pos);
    const std::uint32_t size = read_u32(buf.data() + pos + 4);
    pos += 8;
    if (pos + size > buf.size())
      throw MalformedWav(path.string() + ": chunk overruns file");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) throw MalformedWav(path.string() + ": fmt chunk too small");
      format = read_u16(buf.data() + pos);
      channels = read_u16(buf.data() + pos + 2);
      rate = read_u32(buf.data() + pos + 4);
      bits = read_u16(buf.data() + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = buf.data() + pos;
      data_len = size;
    }
    pos += size + (size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr)
    throw MalformedWav(path.string() + ": missing fmt or data chunk");
  if (format != kFormatPcm && format != kFormatIeeeFloat)
    throw UnsupportedEncoding(path.string() + ": format code " +
                              std::to_string(format));
  if (format == kFormatPcm && bits != 16)
    throw UnsupportedEncoding(path.string() + ": PCM with " +
                              std::to_string(bits) + " bits");
  if (format == kFormatIeeeFloat && bits != 32)
    throw UnsupportedEncoding(path.string() + ": float with " +
                              std::to_string(bits) + " bits");
  if (channels != 1 && channels != 2)
    throw UnsupportedEncoding(path.string() + ": " + std::to_string(channels) +
                              " channels");
  if (rate == 0) throw MalformedWav(path.string() + ": zero sample rate");

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_size = bytes_per_sample * channels;
  if (frame_size == 0 || data_len % frame_size != 0)
    throw MalformedWav(path.string() + ": data size not a whole frame count");
  const std::size_t n_frames = data_len / frame_size;

  AudioClip clip;
  clip.rate = static_cast<int>(rate);
  clip.samples.resize(n_frames);
  const double inv_chan = 1.0 / channels;
  for (std::size_t f = 0; f < n_frames; ++f) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const std::uint8_t* p = data + (f * channels + c) * bytes_per_sample;
      if (format == kFormatPcm) {
        const auto raw = static_cast<std::int16_t>(read_u16(p));
        acc += raw / 32768.0;
      } else {
        std::uint32_t u = read_u32(p);
        float v = std::bit_cast<float>(u);
        acc += std::clamp(static_cast<double>(v), -1.0, 1.0);
      }
    }
    clip.samples[f] = acc * inv_chan;
  }
  return clip;
}

void write_wav(const std::filesystem::path& path, const AudioClip& clip) {
  if (clip.empty()) throw EmptySignal("write_wav: empty clip");
  if (clip.rate <= 0) throw MalformedWav("write_wav: non-positive rate");

  const auto n = static_cast<std::uint32_t>(clip.samples.size());
  std::vector<std::uint8_t> out;
  out.reserve(44 + 2 * n);
  put_tag(out, "RIFF");
  put_u32(out, 36 + 2 * n);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(clip.rate));
  put_u32(out, static_cast<std::uint32_t>(clip.rate) * 2);  // byte rate
  put_u16(out, 2);                                          // block align
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, 2 * n);
  for (double s : clip.samples) {
    const double c = std::clamp(s, -1.0, 1.0);
    const auto q = static_cast<std::int32_t>(std::llround(c * 32768.0));
    const auto v = static_cast<std::int16_t>(std::clamp(q, -32768, 32767));
    put_u16(out, static_cast<std::uint16_t>(v));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot open " + path.string() + " for writing");
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoFailure("short write to " + path.string());
}

}  // namespace digitrec
