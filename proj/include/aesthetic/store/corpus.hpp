#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aesthetic/color/basic_color.hpp"
#include "aesthetic/image/standard_image.hpp"
#include "aesthetic/scoring/scoring.hpp"
#include "aesthetic/store/feature_table.hpp"

namespace aesthetic::store {

/// Feature table plus what predictions need besides it: the frozen stats
/// snapshot and each image's dominant colors.
struct Corpus {
  FeatureTable table;
  std::optional<scoring::DatasetStats> stats;
  std::map<std::string, color::DominantColorSummary> colors;

  /// Throws LookupError when the image has no stored summary.
  const color::DominantColorSummary& colorsOf(const std::string& imageId) const;
};

struct SkippedImage {
  std::filesystem::path path;
  std::string reason;
};

struct IngestOptions {
  std::optional<std::filesystem::path> likesFile;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct IngestResult {
  Corpus corpus;
  std::map<std::string, image::StandardImage> images;
  std::vector<SkippedImage> skipped;
};

/// True for .png, .jpg and .jpeg (any case).
bool isSupportedImagePath(const std::filesystem::path& path);

/// Standardizes every PNG/JPEG in `directory` (non-recursive, sorted by file
/// name), extracts features, freezes stats and scores each image. Image ids
/// are file stems. Undecodable files are skipped and reported. Throws
/// IoError if the directory cannot be listed and ArgumentError if no image
/// could be ingested.
IngestResult ingest(const std::filesystem::path& directory, const IngestOptions& options = {});

/// Builds a corpus from already-standardized images (id -> image).
IngestResult ingestImages(std::map<std::string, image::StandardImage> images,
                          const std::map<std::string, std::uint64_t>& likes = {}, unsigned threads = 0);

/// Reads a sidecar `image_id,likes` CSV.
std::map<std::string, std::uint64_t> loadLikes(const std::filesystem::path& path);

/// Sidecar paths next to a features CSV: <stem>.colors.csv and <stem>.stats.json.
std::filesystem::path colorsPathFor(const std::filesystem::path& tablePath);
std::filesystem::path statsPathFor(const std::filesystem::path& tablePath);

void saveCorpus(const Corpus& corpus, const std::filesystem::path& tablePath);
/// Loads the table and whichever sidecars exist.
Corpus loadCorpus(const std::filesystem::path& tablePath);

std::string formatColors(const std::map<std::string, color::DominantColorSummary>& colors);
std::map<std::string, color::DominantColorSummary> parseColors(std::string_view text);

std::string formatStats(const scoring::DatasetStats& stats);
scoring::DatasetStats parseStats(std::string_view text);

}  // namespace aesthetic::store
