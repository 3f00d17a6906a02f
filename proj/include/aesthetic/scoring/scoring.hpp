#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "aesthetic/features/features.hpp"

namespace aesthetic::scoring {

struct FeatureRange {
  double min = 0.0;
  double max = 0.0;

  bool operator==(const FeatureRange&) const = default;
};

/// Corpus-wide min/max per raw feature, frozen when a corpus is ingested.
struct DatasetStats {
  FeatureRange colorHarmony;
  FeatureRange lightness;
  FeatureRange complexity;

  /// Throws ArgumentError on an empty corpus.
  static DatasetStats fromFeatures(std::span<const features::FeatureVector> corpus);
  /// Throws ArgumentError if any min > max.
  void validate() const;

  bool operator==(const DatasetStats&) const = default;
};

/// (x - min) / (max - min), clamped to [0, 1]; 0.5 when max == min.
double minMaxNormalize(double x, const FeatureRange& range);
/// Inverse of minMaxNormalize for a non-degenerate range.
double denormalize(double normalized, const FeatureRange& range);

struct AestheticWeights {
  double colorHarmony = 1.0;
  double lightness = 2.0;
  double simplicity = 1.0;
};

/// Weighted average of normalized harmony, lightness and simplicity.
/// Throws ArgumentError if an input lies outside [0, 1].
double aestheticScore(double colorHarmonyNorm, double lightnessNorm, double simplicityNorm,
                      const AestheticWeights& weights = {});

struct NormalizedFeatures {
  double colorHarmony = 0.0;
  double lightness = 0.0;
  double complexity = 0.0;
  double simplicity = 0.0;  // 1 - complexity

  bool operator==(const NormalizedFeatures&) const = default;
};

NormalizedFeatures normalize(const features::FeatureVector& raw, const DatasetStats& stats);

struct ScoredRow {
  std::string imageId;
  std::uint64_t likes = 0;
  features::FeatureVector raw;
  NormalizedFeatures normalized;
  double aestheticScore = 0.0;

  bool operator==(const ScoredRow&) const = default;
};

ScoredRow scoreImage(std::string imageId, std::uint64_t likes, const features::FeatureVector& raw,
                     const DatasetStats& stats);

/// Pearson r. Throws ArgumentError on mismatched lengths or fewer than two
/// samples, UndefinedCorrelationError when either series has zero variance.
double pearsonCorrelation(std::span<const double> a, std::span<const double> b);

}  // namespace aesthetic::scoring
