#include <filesystem>
#include <fstream>

#include "digitrec/errors.hpp"
#include "digitrec/manifest.hpp"
#include "digitrec/synth_corpus.hpp"
#include "digitrec/wav.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace digitrec;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / "digitrec_test_data" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("scan_directory labels by parent folder") {
  auto dir = fresh_dir("by_folder");
  auto clip = testutil::make_sine(440.0, 0.3, 8000, 0.05);
  for (int c = 0; c < 10; ++c) {
    fs::create_directories(dir / std::to_string(c));
    for (int i = 0; i < 3; ++i)
      write_wav(dir / std::to_string(c) / ("u" + std::to_string(i) + ".wav"),
                clip);
  }
  auto m = scan_directory(dir, LabelRule::ParentFolder);
  CHECK(m.entries.size() == 30);
  auto hist = label_histogram(m);
  for (auto h : hist) CHECK(h == 3);
}

TEST_CASE("scan_directory labels by filename prefix") {
  auto dir = fresh_dir("by_prefix");
  auto clip = testutil::make_sine(440.0, 0.3, 8000, 0.05);
  write_wav(dir / "7_speaker3_rep2.wav", clip);
  auto m = scan_directory(dir, LabelRule::FilenamePrefix);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].label == 7);
}

TEST_CASE("scan_directory rejects unlabeled files with a listing") {
  auto dir = fresh_dir("unlabeled");
  auto clip = testutil::make_sine(440.0, 0.3, 8000, 0.05);
  fs::create_directories(dir / "ten");
  write_wav(dir / "ten" / "x.wav", clip);
  try {
    scan_directory(dir, LabelRule::ParentFolder);
    FAIL("expected UnlabeledFile");
  } catch (const UnlabeledFile& e) {
    CHECK(std::string(e.what()).find("ten/x.wav") != std::string::npos);
  }

  auto empty = fresh_dir("empty");
  CHECK_THROWS_AS(scan_directory(empty, LabelRule::ParentFolder), NoFilesFound);
}

TEST_CASE("manifest save/load round-trip is lossless") {
  Manifest m;
  m.root = fresh_dir("roundtrip");
  ManifestEntry plain{.path = "3/a.wav", .label = 3, .source_id = "a"};
  ManifestEntry noisy{.path = "3/a_n.wav", .label = 3, .source_id = "a"};
  noisy.augmentation = AugmentationSpec{.kind = AugmentationKind::Noise,
                                        .category = NoiseCategory::Hum,
                                        .snr_db = 5.0,
                                        .seed = 12345678901234567890ULL};
  noisy.split = "train";
  ManifestEntry sped{.path = "4/b_s.wav", .label = 4, .source_id = "b"};
  sped.augmentation =
      AugmentationSpec{.kind = AugmentationKind::Speed, .factor = 1.05, .seed = 9};
  ManifestEntry hall{.path = "4/b_h.wav", .label = 4, .source_id = "b"};
  hall.augmentation =
      AugmentationSpec{.kind = AugmentationKind::Hall, .rt60_s = 1.75, .seed = 10};
  m.entries = {plain, noisy, sped, hall};

  const auto path = m.root / "manifest.jsonl";
  save_manifest(path, m);
  auto loaded = load_manifest(path);
  REQUIRE(loaded.entries.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(loaded.entries[i].path == m.entries[i].path);
    CHECK(loaded.entries[i].label == m.entries[i].label);
    CHECK(loaded.entries[i].source_id == m.entries[i].source_id);
    CHECK(loaded.entries[i].split == m.entries[i].split);
    CHECK(loaded.entries[i].augmentation.has_value() ==
          m.entries[i].augmentation.has_value());
  }
  CHECK(loaded.entries[1].augmentation->snr_db == 5.0);
  CHECK(loaded.entries[1].augmentation->seed == 12345678901234567890ULL);
  CHECK(loaded.entries[2].augmentation->factor == 1.05);
  CHECK(loaded.entries[3].augmentation->rt60_s == 1.75);
}

TEST_CASE("load_manifest reports the offending line") {
  auto dir = fresh_dir("badline");
  const auto path = dir / "manifest.jsonl";
  {
    std::ofstream out(path);
    for (int i = 1; i <= 16; ++i)
      out << R"({"path":"0/x.wav","label":0,"source_id":"x","augmentation":null,"split":null})"
          << '\n';
    out << "not json at all\n";
  }
  try {
    load_manifest(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 17);
  }
}

TEST_CASE("load_manifest of an empty file is an empty manifest") {
  auto dir = fresh_dir("emptyfile");
  const auto path = dir / "manifest.jsonl";
  std::ofstream(path).close();
  CHECK(load_manifest(path).entries.empty());
}

TEST_CASE("synth_digit_dataset writes n files per class, deterministically") {
  auto dir = fresh_dir("synth_a");
  Rng rng(77);
  auto m = synth_digit_dataset(4, 11025, rng, dir);
  CHECK(m.entries.size() == 40);
  auto hist = label_histogram(m);
  for (auto h : hist) CHECK(h == 4);
  for (const auto& e : m.entries) CHECK(fs::exists(m.resolve(e)));

  auto dir2 = fresh_dir("synth_b");
  Rng rng2(77);
  auto m2 = synth_digit_dataset(4, 11025, rng2, dir2);
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    auto a = read_wav(m.resolve(m.entries[i]));
    auto b = read_wav(m2.resolve(m2.entries[i]));
    CHECK(a.samples == b.samples);
  }
}

TEST_CASE("synth digit tokens sit on their formant targets") {
  // class 9: F1 = 840 Hz, F2 = 1980 Hz (±5% incl. jitter and f0 harmonics)
  Rng rng(123);
  auto token = synth_digit_token(9, 16000, rng);
  const double p1 = testutil::fft_peak_hz(token.samples, 16000, 700.0, 1000.0);
  const double p2 = testutil::fft_peak_hz(token.samples, 16000, 1700.0, 2300.0);
  CHECK(std::fabs(p1 - 840.0) <= 0.05 * 840.0);
  CHECK(std::fabs(p2 - 1980.0) <= 0.05 * 1980.0);
}
