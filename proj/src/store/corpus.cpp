#include "aesthetic/store/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <thread>

#include <json.hpp>

#include "aesthetic/errors.hpp"
#include "aesthetic/features/features.hpp"
#include "aesthetic/store/text.hpp"

namespace aesthetic::store {

namespace {

constexpr std::string_view kLikesHeader = "image_id,likes";
constexpr std::string_view kColorsHeader = "image_id,rank,color,pixels";

struct Extracted {
  features::FeatureVector features;
  color::DominantColorSummary colors;
};

// Fan-out over a fixed worker count; results land in per-index slots so the
// assembled table does not depend on scheduling.
std::vector<Extracted> extractAll(const std::vector<const image::StandardImage*>& images, unsigned threads) {
  std::vector<Extracted> out(images.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < images.size(); i = next++) {
      out[i] = {features::extractFeatures(*images[i]), color::dominantColors(*images[i])};
    }
  };

  unsigned count = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, images.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

}  // namespace

const color::DominantColorSummary& Corpus::colorsOf(const std::string& imageId) const {
  auto it = colors.find(imageId);
  if (it == colors.end()) throw LookupError("no dominant-color summary for image '" + imageId + "'");
  return it->second;
}

bool isSupportedImagePath(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

IngestResult ingestImages(std::map<std::string, image::StandardImage> images,
                          const std::map<std::string, std::uint64_t>& likes, unsigned threads) {
  if (images.empty()) throw ArgumentError("no images to ingest");

  std::vector<std::string> ids;
  for (const auto& [id, img] : images) {
    if (!isValidImageId(id)) throw ArgumentError("invalid image id '" + id + "'");
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) { return imageIdLess(a, b); });
  std::vector<const image::StandardImage*> ptrs;
  for (const auto& id : ids) ptrs.push_back(&images.at(id));
  const auto extracted = extractAll(ptrs, threads);

  std::vector<features::FeatureVector> raw;
  raw.reserve(extracted.size());
  for (const auto& e : extracted) raw.push_back(e.features);
  const auto stats = scoring::DatasetStats::fromFeatures(raw);

  IngestResult result;
  std::vector<scoring::ScoredRow> rows;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = likes.find(ids[i]);
    rows.push_back(scoring::scoreImage(ids[i], it == likes.end() ? 0 : it->second, raw[i], stats));
    result.corpus.colors.emplace(ids[i], extracted[i].colors);
  }
  result.corpus.table = FeatureTable(std::move(rows));
  result.corpus.stats = stats;
  result.images = std::move(images);
  return result;
}

IngestResult ingest(const std::filesystem::path& directory, const IngestOptions& options) {
  std::error_code ec;
  std::filesystem::directory_iterator it(directory, ec);
  if (ec) throw IoError("cannot list " + directory.string() + ": " + ec.message());

  std::vector<std::filesystem::path> files;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && isSupportedImagePath(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::map<std::string, image::StandardImage> images;
  std::vector<SkippedImage> skipped;
  for (const auto& file : files) {
    const auto id = file.stem().string();
    if (!isValidImageId(id)) {
      skipped.push_back({file, "file name is not a valid image id"});
      continue;
    }
    if (images.count(id) != 0) {
      skipped.push_back({file, "duplicate image id '" + id + "'"});
      continue;
    }
    try {
      images.emplace(id, image::loadAndStandardize(file));
    } catch (const FormatError& e) {
      skipped.push_back({file, e.what()});
    } catch (const IoError& e) {
      skipped.push_back({file, e.what()});
    }
  }
  if (images.empty()) throw ArgumentError("no decodable images in " + directory.string());

  const auto likes = options.likesFile ? loadLikes(*options.likesFile) : std::map<std::string, std::uint64_t>{};
  auto result = ingestImages(std::move(images), likes, options.threads);
  result.skipped = std::move(skipped);
  return result;
}

std::map<std::string, std::uint64_t> loadLikes(const std::filesystem::path& path) {
  const auto text = readTextFile(path);
  const auto lines = splitLines(text);
  if (lines.empty() || lines.front() != kLikesHeader) throw ParseError(1, "likes file must start with 'image_id,likes'");

  std::map<std::string, std::uint64_t> likes;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = splitCsvLine(lines[i]);
    if (cells.size() != 2) throw ParseError(i + 1, "expected 2 columns");
    if (!likes.emplace(std::string(cells[0]), parseUnsigned(cells[1], i + 1, "likes")).second) {
      throw ParseError(i + 1, "duplicate image_id '" + std::string(cells[0]) + "'");
    }
  }
  return likes;
}

std::filesystem::path colorsPathFor(const std::filesystem::path& tablePath) {
  return tablePath.parent_path() / (tablePath.stem().string() + ".colors.csv");
}

std::filesystem::path statsPathFor(const std::filesystem::path& tablePath) {
  return tablePath.parent_path() / (tablePath.stem().string() + ".stats.json");
}

std::string formatColors(const std::map<std::string, color::DominantColorSummary>& colors) {
  std::string out(kColorsHeader);
  out += '\n';
  for (const auto& [id, summary] : colors) {
    std::size_t rank = 1;
    for (const auto& entry : summary.entries()) {
      out += id + ',' + std::to_string(rank++) + ',' + std::string(color::name(entry.color)) + ',' +
             std::to_string(entry.pixels) + '\n';
    }
  }
  return out;
}

std::map<std::string, color::DominantColorSummary> parseColors(std::string_view text) {
  const auto lines = splitLines(text);
  if (lines.empty() || lines.front() != kColorsHeader) {
    throw ParseError(1, "colors file must start with '" + std::string(kColorsHeader) + "'");
  }

  std::map<std::string, std::vector<color::ColorCount>> grouped;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = splitCsvLine(lines[i]);
    if (cells.size() != 4) throw ParseError(i + 1, "expected 4 columns");
    auto& entries = grouped[std::string(cells[0])];
    if (parseUnsigned(cells[1], i + 1, "rank") != entries.size() + 1) throw ParseError(i + 1, "ranks must run 1, 2, ...");
    const auto c = color::parseBasicColor(cells[2]);
    if (!c) throw ParseError(i + 1, "unknown color '" + std::string(cells[2]) + "'");
    entries.push_back({*c, parseUnsigned(cells[3], i + 1, "pixels")});
  }

  std::map<std::string, color::DominantColorSummary> out;
  for (auto& [id, entries] : grouped) {
    try {
      out.emplace(id, color::DominantColorSummary(std::move(entries)));
    } catch (const ArgumentError& e) {
      throw ParseError(0, "image '" + id + "': " + e.what());
    }
  }
  return out;
}

std::string formatStats(const scoring::DatasetStats& stats) {
  auto range = [](const scoring::FeatureRange& r) { return nlohmann::json{{"min", r.min}, {"max", r.max}}; };
  nlohmann::json doc = {{"color_harmony", range(stats.colorHarmony)},
                        {"lightness", range(stats.lightness)},
                        {"complexity", range(stats.complexity)}};
  return doc.dump(2) + "\n";
}

scoring::DatasetStats parseStats(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    auto range = [&](const char* key) {
      const auto& r = doc.at(key);
      return scoring::FeatureRange{r.at("min").get<double>(), r.at("max").get<double>()};
    };
    scoring::DatasetStats stats{range("color_harmony"), range("lightness"), range("complexity")};
    stats.validate();
    return stats;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed stats snapshot: ") + e.what());
  } catch (const ArgumentError& e) {
    throw FormatError(std::string("invalid stats snapshot: ") + e.what());
  }
}

void saveCorpus(const Corpus& corpus, const std::filesystem::path& tablePath) {
  saveTable(corpus.table, tablePath);
  writeTextFile(colorsPathFor(tablePath), formatColors(corpus.colors));
  if (corpus.stats) writeTextFile(statsPathFor(tablePath), formatStats(*corpus.stats));
}

Corpus loadCorpus(const std::filesystem::path& tablePath) {
  Corpus corpus;
  corpus.table = loadTable(tablePath);
  if (const auto path = colorsPathFor(tablePath); std::filesystem::exists(path)) {
    corpus.colors = parseColors(readTextFile(path));
  }
  if (const auto path = statsPathFor(tablePath); std::filesystem::exists(path)) {
    corpus.stats = parseStats(readTextFile(path));
  }
  return corpus;
}

}  // namespace aesthetic::store
