#include "digitrec/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "digitrec/errors.hpp"
#include "json.hpp"

namespace digitrec {

namespace {

using nlohmann::ordered_json;

ordered_json spec_to_json(const AugmentationSpec& s) {
  ordered_json j;
  j["kind"] = std::string(to_string(s.kind));
  switch (s.kind) {
    case AugmentationKind::Noise:
      j["category"] = std::string(to_string(s.category));
      j["snr_db"] = s.snr_db;
      break;
    case AugmentationKind::Speed:
      j["factor"] = s.factor;
      break;
    case AugmentationKind::Reverb:
    case AugmentationKind::Hall:
      j["rt60_s"] = s.rt60_s;
      break;
  }
  j["seed"] = s.seed;
  return j;
}

AugmentationSpec spec_from_json(const ordered_json& j) {
  AugmentationSpec s;
  const auto kind = augmentation_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw Error("unknown augmentation kind " + j.at("kind").dump());
  s.kind = *kind;
  switch (s.kind) {
    case AugmentationKind::Noise: {
      const auto cat = noise_category_from_string(j.at("category").get<std::string>());
      if (!cat) throw Error("unknown noise category " + j.at("category").dump());
      s.category = *cat;
      s.snr_db = j.at("snr_db").get<double>();
      break;
    }
    case AugmentationKind::Speed:
      s.factor = j.at("factor").get<double>();
      break;
    case AugmentationKind::Reverb:
    case AugmentationKind::Hall:
      s.rt60_s = j.at("rt60_s").get<double>();
      break;
  }
  s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

int parse_label_token(const std::string& token) {
  if (token.size() == 1 && token[0] >= '0' && token[0] <= '9')
    return token[0] - '0';
  return -1;
}

}  // namespace

Manifest scan_directory(const std::filesystem::path& dir, LabelRule rule) {
  if (!std::filesystem::is_directory(dir))
    throw IoFailure("not a directory: " + dir.string());

  Manifest m;
  m.root = dir;
  std::vector<std::string> unlabeled;
  for (const auto& de : std::filesystem::recursive_directory_iterator(dir)) {
    if (!de.is_regular_file() || de.path().extension() != ".wav") continue;
    const auto rel = std::filesystem::relative(de.path(), dir);

    int label = -1;
    if (rule == LabelRule::ParentFolder) {
      label = parse_label_token(de.path().parent_path().filename().string());
    } else {
      const auto stem = de.path().stem().string();
      if (!stem.empty() && stem[0] >= '0' && stem[0] <= '9' &&
          (stem.size() == 1 || stem[1] < '0' || stem[1] > '9'))
        label = stem[0] - '0';
    }
    if (label < 0) {
      unlabeled.push_back(rel.string());
      continue;
    }

    ManifestEntry e;
    e.path = rel.generic_string();
    e.label = label;
    auto sid = rel;
    sid.replace_extension();
    e.source_id = sid.generic_string();
    std::replace(e.source_id.begin(), e.source_id.end(), '/', '_');
    m.entries.push_back(std::move(e));
  }

  if (!unlabeled.empty()) {
    std::sort(unlabeled.begin(), unlabeled.end());
    std::ostringstream msg;
    msg << unlabeled.size() << " file(s) without a digit label:";
    for (const auto& f : unlabeled) msg << "\n  " << f;
    throw UnlabeledFile(msg.str());
  }
  if (m.entries.empty())
    throw NoFilesFound("no .wav files under " + dir.string());

  std::sort(m.entries.begin(), m.entries.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path.string());

  Manifest m;
  m.root = path.parent_path();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = ordered_json::parse(line);
      ManifestEntry e;
      e.path = j.at("path").get<std::string>();
      e.label = j.at("label").get<int>();
      if (e.label < 0 || e.label > 9) throw Error("label out of range 0-9");
      e.source_id = j.at("source_id").get<std::string>();
      if (!j.at("augmentation").is_null())
        e.augmentation = spec_from_json(j.at("augmentation"));
      if (j.contains("split") && !j.at("split").is_null())
        e.split = j.at("split").get<std::string>();
      m.entries.push_back(std::move(e));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(line_no, ex.what());
    }
  }
  return m;
}

void save_manifest(const std::filesystem::path& path, const Manifest& m) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  for (const auto& e : m.entries) {
    ordered_json j;
    j["path"] = e.path;
    j["label"] = e.label;
    j["source_id"] = e.source_id;
    j["augmentation"] =
        e.augmentation ? spec_to_json(*e.augmentation) : ordered_json(nullptr);
    j["split"] = e.split ? ordered_json(*e.split) : ordered_json(nullptr);
    out << j.dump() << '\n';
  }
  if (!out) throw IoFailure("short write to " + path.string());
}

std::vector<std::size_t> label_histogram(const Manifest& m) {
  std::vector<std::size_t> hist(10, 0);
  for (const auto& e : m.entries)
    if (e.label >= 0 && e.label <= 9) ++hist[static_cast<std::size_t>(e.label)];
  return hist;
}

}  // namespace digitrec
